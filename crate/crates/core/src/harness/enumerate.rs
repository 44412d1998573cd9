use std::collections::BTreeMap;

use crate::graph::{Graph, GraphError};

/// Largest order [`enumerate_connected`] accepts.
pub const MAX_ENUMERATION_ORDER: usize = 8;

/// Upper-triangle adjacency code in graph6 bit order `x(0,1), x(0,2), x(1,2), ..`,
/// first pair in the most significant position.
fn code_under(g: &Graph, order: &[usize]) -> u64 {
    let n = order.len();
    let mut code = 0u64;
    for j in 1..n {
        for i in 0..j {
            code = code << 1 | g.has_edge(order[i], order[j]) as u64;
        }
    }
    code
}

/// Ordered colour classes from colour refinement. Colours are ranked by their
/// refinement signatures, so the ordered partition is isomorphism invariant.
fn refined_cells(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut color: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = 0;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|w| color[w]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let ranks: BTreeMap<&(usize, Vec<usize>), usize> =
            sigs.iter().collect::<std::collections::BTreeSet<_>>().into_iter().enumerate().map(|(k, s)| (s, k)).collect();
        color = sigs.iter().map(|s| ranks[s]).collect();
        if ranks.len() == classes {
            break;
        }
        classes = ranks.len();
    }
    let mut cells = vec![Vec::new(); classes];
    for v in 0..n {
        cells[color[v]].push(v);
    }
    cells
}

/// The canonical code of `g` and a vertex order realizing it.
///
/// The code is the smallest adjacency code over all orders that list the
/// refined colour classes in rank order, each class permuted freely.
pub fn canonical_form(g: &Graph) -> (u64, Vec<usize>) {
    let cells = refined_cells(g);
    let mut best = (0u64, Vec::new());
    let mut order = Vec::with_capacity(g.n());
    let mut found = false;
    search(g, &cells, 0, &mut order, &mut best, &mut found);
    best
}

fn search(g: &Graph, cells: &[Vec<usize>], k: usize, order: &mut Vec<usize>, best: &mut (u64, Vec<usize>), found: &mut bool) {
    if k == cells.len() {
        let code = code_under(g, order);
        if !*found || code < best.0 {
            *best = (code, order.clone());
            *found = true;
        }
        return;
    }
    let mut cell = cells[k].clone();
    permute(&mut cell, 0, &mut |perm| {
        let len = order.len();
        order.extend_from_slice(perm);
        search(g, cells, k + 1, order, best, found);
        order.truncate(len);
    });
}

fn permute(items: &mut [usize], start: usize, f: &mut dyn FnMut(&[usize])) {
    if start == items.len() {
        f(items);
        return;
    }
    for i in start..items.len() {
        items.swap(start, i);
        permute(items, start + 1, f);
        items.swap(start, i);
    }
}

/// The graph relabeled into canonical order.
pub fn canonical_graph(g: &Graph) -> Graph {
    let (_, order) = canonical_form(g);
    let mut perm = vec![0; g.n()];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new;
    }
    g.permuted(&perm)
}

/// One representative per isomorphism class of graphs on `n` vertices, in
/// canonical labeling, sorted by canonical code.
pub fn enumerate_all(n: usize) -> Result<Vec<Graph>, GraphError> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(GraphError::Invalid(format!("enumeration supports n <= {MAX_ENUMERATION_ORDER}, got {n}")));
    }
    let mut layer = vec![Graph::empty(0)?];
    for k in 0..n {
        let mut next: BTreeMap<u64, Graph> = BTreeMap::new();
        for g in &layer {
            for mask in 0u64..1 << k {
                let nbrs: Vec<usize> = (0..k).filter(|&i| mask >> i & 1 == 1).collect();
                let h = g.with_vertex(&nbrs)?;
                let (code, _) = canonical_form(&h);
                next.entry(code).or_insert_with(|| canonical_graph(&h));
            }
        }
        layer = next.into_values().collect();
    }
    Ok(layer)
}

/// Connected graphs on `n` vertices up to isomorphism, `3 <= n <= 8`.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>, GraphError> {
    if !(3..=MAX_ENUMERATION_ORDER).contains(&n) {
        return Err(GraphError::Invalid(format!("enumeration supports 3 <= n <= {MAX_ENUMERATION_ORDER}, got {n}")));
    }
    Ok(enumerate_all(n)?.into_iter().filter(Graph::is_connected).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_counts() {
        let all: Vec<usize> = (0..=6).map(|n| enumerate_all(n).unwrap().len()).collect();
        assert_eq!(all, vec![1, 1, 2, 4, 11, 34, 156]);
        let conn: Vec<usize> = (3..=6).map(|n| enumerate_connected(n).unwrap().len()).collect();
        assert_eq!(conn, vec![2, 6, 21, 112]);
        assert!(enumerate_connected(2).is_err());
        assert!(enumerate_connected(9).is_err());
    }

    #[test]
    fn canonical_form_is_invariant() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (2, 5)]).unwrap();
        let perm = [3, 5, 0, 1, 4, 2];
        let h = g.permuted(&perm);
        assert_eq!(canonical_form(&g).0, canonical_form(&h).0);
        assert_eq!(canonical_graph(&g), canonical_graph(&h));
        let other = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 5)]).unwrap();
        assert_ne!(canonical_form(&g).0, canonical_form(&other).0);
    }

    #[test]
    fn regular_graphs_separate() {
        // C6 and two triangles are both 2-regular on six vertices.
        let c6 = Graph::cycle(6).unwrap();
        let tt = Graph::cycle(3).unwrap().disjoint_union(&Graph::cycle(3).unwrap()).unwrap();
        assert_ne!(canonical_form(&c6).0, canonical_form(&tt).0);
    }
}
