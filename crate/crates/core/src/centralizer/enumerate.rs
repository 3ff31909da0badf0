//! Brute-force enumeration of the irreducible basis-candidate diagrams of
//! each family, graded by the number of invariant vertices.

use crate::diagram::{canonicalize, Diagram, Edge, End, Family, Signature, VertexKind};
use std::collections::BTreeSet;

/// All canonical, locally irreducible diagrams with the given vertex
/// multiset on the given signature.
pub fn enumerate_order(family: Family, sig: &Signature, verts: Vec<VertexKind>) -> Vec<Diagram> {
    let p = sig.strands();
    // endpoint slots: ports once, vertices by arity
    let mut slots: Vec<End> = Vec::new();
    for i in 0..p {
        slots.push(End::In(i as u8));
    }
    for i in 0..p {
        slots.push(End::Out(i as u8));
    }
    for (k, v) in verts.iter().enumerate() {
        for _ in 0..v.arity() {
            slots.push(End::Vx(k as u8));
        }
    }
    if slots.len() % 2 != 0 {
        return vec![];
    }
    let proto = Diagram {
        family,
        sig: sig.clone(),
        verts: verts.clone(),
        edges: vec![],
    };
    let mut found: BTreeSet<Diagram> = BTreeSet::new();
    let mut edges: Vec<Edge> = Vec::new();
    let mut used = vec![false; slots.len()];
    match_slots(&proto, &slots, &mut used, &mut edges, &mut found);
    found.into_iter().collect()
}

fn match_slots(
    proto: &Diagram,
    slots: &[End],
    used: &mut Vec<bool>,
    edges: &mut Vec<Edge>,
    found: &mut BTreeSet<Diagram>,
) {
    let first = match used.iter().position(|u| !u) {
        None => {
            let d = Diagram {
                family: proto.family,
                sig: proto.sig.clone(),
                verts: proto.verts.clone(),
                edges: edges.clone(),
            };
            if d.validate().is_err() {
                return;
            }
            if !is_locally_irreducible(&d) {
                return;
            }
            if let Some((cd, _)) = canonicalize(&d) {
                found.insert(cd);
            }
            return;
        }
        Some(i) => i,
    };
    used[first] = true;
    let mut tried_vertex: BTreeSet<(End, End)> = BTreeSet::new();
    for j in (first + 1)..slots.len() {
        if used[j] {
            continue;
        }
        // symmetry breaking: slots of the same vertex are interchangeable
        if !tried_vertex.insert((slots[first], slots[j])) {
            continue;
        }
        let (a, b) = (slots[first], slots[j]);
        if proto.family.oriented() {
            // edge must join one upper and one lower delta end
            let da = Diagram {
                family: proto.family,
                sig: proto.sig.clone(),
                verts: proto.verts.clone(),
                edges: vec![],
            };
            if da.end_is_upper(a) == da.end_is_upper(b) {
                continue;
            }
        }
        let j_flag = if proto.family.symplectic() {
            proto.expected_j(a, b)
        } else {
            false
        };
        // symmetric vertex closed on its own arrow vanishes
        if j_flag && a == b {
            continue;
        }
        used[j] = true;
        edges.push(Edge { a, b, j: j_flag });
        match_slots(proto, slots, used, edges, found);
        edges.pop();
        used[j] = false;
    }
    used[first] = false;
}

/// No local rewrite applies: no vertex pair shares two edges, no
/// alternating 4-cycle (e6), no arrowed self-edge.
pub fn is_locally_irreducible(d: &Diagram) -> bool {
    let nv = d.verts.len();
    for e in &d.edges {
        if e.j && e.a == e.b {
            return false;
        }
    }
    let shared = |v1: usize, v2: usize| -> usize {
        d.edges
            .iter()
            .filter(|e| {
                let t = |end: End, v: usize| matches!(end, End::Vx(k) if k as usize == v);
                (t(e.a, v1) && t(e.b, v2)) || (t(e.a, v2) && t(e.b, v1))
            })
            .count()
    };
    for v1 in 0..nv {
        for v2 in (v1 + 1)..nv {
            if shared(v1, v2) >= 2 {
                return false;
            }
        }
    }
    if d.family == Family::E6 {
        for b1 in 0..nv {
            if d.verts[b1] != VertexKind::D3Bar {
                continue;
            }
            for b3 in (b1 + 1)..nv {
                if d.verts[b3] != VertexKind::D3Bar {
                    continue;
                }
                for w2 in 0..nv {
                    if d.verts[w2] != VertexKind::D3 {
                        continue;
                    }
                    for w4 in 0..nv {
                        if w4 == w2 || d.verts[w4] != VertexKind::D3 {
                            continue;
                        }
                        if shared(b1, w2) == 1
                            && shared(w2, b3) == 1
                            && shared(b3, w4) == 1
                            && shared(w4, b1) == 1
                        {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

/// Basis candidates grouped by order (vertex pairs for e6, vertices for e7).
pub fn candidates(family: Family, sig: &Signature) -> Vec<Vec<Diagram>> {
    let max_order = match family {
        Family::Su | Family::So | Family::Sp => 0,
        Family::E6 => {
            if sig == &Signature::mixed() {
                1
            } else if sig.strands() == 2 {
                1
            } else {
                2
            }
        }
        Family::E7 => 2,
    };
    (0..=max_order)
        .map(|k| {
            let verts = match family {
                Family::E6 => {
                    let mut v = vec![VertexKind::D3Bar; k];
                    v.extend(vec![VertexKind::D3; k]);
                    v
                }
                Family::E7 => vec![VertexKind::D4; k],
                _ => vec![],
            };
            enumerate_order(family, sig, verts)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_matching_counts() {
        let sig3 = Signature::all_v(3);
        let sig2 = Signature::all_v(2);
        assert_eq!(candidates(Family::Su, &sig3)[0].len(), 6);
        assert_eq!(candidates(Family::Su, &sig2)[0].len(), 2);
        assert_eq!(candidates(Family::So, &sig3)[0].len(), 15);
        assert_eq!(candidates(Family::So, &sig2)[0].len(), 3);
        assert_eq!(candidates(Family::Sp, &sig3)[0].len(), 15);
        assert_eq!(candidates(Family::Sp, &sig2)[0].len(), 3);
    }

    #[test]
    fn e6_candidate_counts() {
        let by_order = candidates(Family::E6, &Signature::all_v(3));
        assert_eq!(by_order[0].len(), 6);
        assert_eq!(by_order[1].len(), 10);
        assert_eq!(by_order[2].len(), 9);
        let p2 = candidates(Family::E6, &Signature::all_v(2));
        assert_eq!(p2[0].len(), 2);
        assert_eq!(p2[1].len(), 1);
        let mixed = candidates(Family::E6, &Signature::mixed());
        assert_eq!(mixed[0].len(), 2);
        assert_eq!(mixed[1].len(), 1);
    }

    #[test]
    fn e7_candidate_counts() {
        let by_order = candidates(Family::E7, &Signature::all_v(3));
        assert_eq!(by_order[0].len(), 15);
        assert_eq!(by_order[1].len(), 15);
        assert_eq!(by_order[2].len(), 10);
        let p2 = candidates(Family::E7, &Signature::all_v(2));
        assert_eq!(p2[0].len(), 3);
        assert_eq!(p2[1].len(), 1);
        assert_eq!(p2[2].len(), 0);
    }
}
