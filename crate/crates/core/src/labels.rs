//! Serializers that print 0-based vertex indices as 1-based labels.

use serde::ser::{SerializeSeq, Serializer};

pub(crate) fn vertex<S: Serializer>(v: &usize, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_u64(*v as u64 + 1)
}

pub(crate) fn opt_vertex<S: Serializer>(v: &Option<usize>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.serialize_some(&(v + 1)),
        None => s.serialize_none(),
    }
}

pub(crate) fn vertices<S: Serializer>(vs: &[usize], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(vs.len()))?;
    for v in vs {
        seq.serialize_element(&(v + 1))?;
    }
    seq.end()
}

pub(crate) fn opt_edges<S: Serializer>(es: &Option<[(usize, usize); 4]>, s: S) -> Result<S::Ok, S::Error> {
    match es {
        Some(es) => {
            let labeled: Vec<[usize; 2]> = es.iter().map(|&(a, b)| [a + 1, b + 1]).collect();
            s.serialize_some(&labeled)
        }
        None => s.serialize_none(),
    }
}
