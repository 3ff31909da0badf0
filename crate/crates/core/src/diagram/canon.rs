//! Canonical labelling of diagrams.
//!
//! External ports are fixed pointwise; only internal vertices are
//! relabelled. Vertex slots are fully interchangeable (the invariant
//! tensors are totally symmetric), so a labelling is just an ordering of
//! the vertices. The canonical representative minimizes the encoded edge
//! list over all orderings compatible with an invariant refinement, with
//! arrow directions normalized endpoint-ascending; every arrow reversal
//! contributes a sign. If the minimal encoding is reached with both signs
//! the diagram is zero (symmetric vertex against antisymmetric arrow).

use super::{Diagram, Edge, End, VertexKind};
use itertools::Itertools;

fn end_key(e: End) -> (u8, u8) {
    match e {
        End::In(i) => (0, i),
        End::Out(i) => (1, i),
        End::Vx(k) => (2, k),
    }
}

/// Canonicalize; returns `None` when the diagram is identically zero.
pub fn canonicalize(d: &Diagram) -> Option<(Diagram, i64)> {
    // A symplectic arrow joining a vertex to itself closes a totally
    // symmetric tensor on the antisymmetric form: zero.
    for e in &d.edges {
        if e.j && e.a == e.b {
            return None;
        }
    }
    let nv = d.verts.len();
    if nv == 0 {
        let mut sign = 1i64;
        let mut edges: Vec<Edge> = d
            .edges
            .iter()
            .map(|e| normalize_edge(*e, &mut sign))
            .collect();
        edges.sort();
        return Some((
            Diagram {
                family: d.family,
                sig: d.sig.clone(),
                verts: d.verts.clone(),
                edges,
            },
            sign,
        ));
    }

    // Invariant refinement to cut the permutation search.
    let classes = refine_classes(d);
    let mut best: Option<(Vec<VertexKind>, Vec<Edge>, i64)> = None;
    let mut ambiguous_zero = false;

    // Enumerate orderings: vertices sorted by class, permuting within each.
    let mut by_class: Vec<Vec<usize>> = Vec::new();
    {
        let mut sorted: Vec<usize> = (0..nv).collect();
        sorted.sort_by_key(|&k| (&classes[k], k));
        let mut cur: Vec<usize> = Vec::new();
        for &k in &sorted {
            if let Some(&first) = cur.first() {
                if classes[first] == classes[k] {
                    cur.push(k);
                    continue;
                }
                by_class.push(std::mem::take(&mut cur));
            }
            cur.push(k);
        }
        if !cur.is_empty() {
            by_class.push(cur);
        }
    }

    let group_perms: Vec<Vec<Vec<usize>>> = by_class
        .iter()
        .map(|g| g.iter().cloned().permutations(g.len()).collect())
        .collect();

    let mut choice = vec![0usize; group_perms.len()];
    loop {
        // assemble ordering: position -> old index
        let mut order: Vec<usize> = Vec::with_capacity(nv);
        for (gi, g) in group_perms.iter().enumerate() {
            order.extend(&g[choice[gi]]);
        }
        // perm[old] = new
        let mut perm = vec![0usize; nv];
        for (new, &old) in order.iter().enumerate() {
            perm[old] = new;
        }
        let mut sign = 1i64;
        let mut edges: Vec<Edge> = d
            .edges
            .iter()
            .map(|e| {
                let map = |x: End| match x {
                    End::Vx(k) => End::Vx(perm[k as usize] as u8),
                    other => other,
                };
                normalize_edge(
                    Edge {
                        a: map(e.a),
                        b: map(e.b),
                        j: e.j,
                    },
                    &mut sign,
                )
            })
            .collect();
        edges.sort();
        let kinds: Vec<VertexKind> = order.iter().map(|&old| d.verts[old]).collect();
        match &best {
            None => best = Some((kinds, edges, sign)),
            Some((bk, be, bs)) => {
                use std::cmp::Ordering;
                match (kinds.cmp(bk), edges.cmp(be)) {
                    (Ordering::Less, _) => best = Some((kinds, edges, sign)),
                    (Ordering::Equal, Ordering::Less) => best = Some((kinds, edges, sign)),
                    (Ordering::Equal, Ordering::Equal) => {
                        if sign != *bs {
                            ambiguous_zero = true;
                        }
                    }
                    _ => {}
                }
            }
        }
        // next choice
        let mut gi = 0;
        loop {
            if gi == choice.len() {
                // done enumerating
                let (kinds, edges, sign) = best.unwrap();
                if ambiguous_zero {
                    return None;
                }
                return Some((
                    Diagram {
                        family: d.family,
                        sig: d.sig.clone(),
                        verts: kinds,
                        edges,
                    },
                    sign,
                ));
            }
            choice[gi] += 1;
            if choice[gi] < group_perms[gi].len() {
                break;
            }
            choice[gi] = 0;
            gi += 1;
        }
    }
}

fn normalize_edge(e: Edge, sign: &mut i64) -> Edge {
    if end_key(e.a) <= end_key(e.b) {
        e
    } else {
        if e.j {
            *sign = -*sign;
        }
        Edge {
            a: e.b,
            b: e.a,
            j: e.j,
        }
    }
}

/// Iterated invariant refinement of the vertex set.
fn refine_classes(d: &Diagram) -> Vec<String> {
    let nv = d.verts.len();
    let mut cls: Vec<String> = (0..nv)
        .map(|k| {
            let mut ports: Vec<(u8, u8)> = Vec::new();
            let mut selfs = 0;
            let mut deg = 0;
            for e in &d.edges {
                let touch_a = matches!(e.a, End::Vx(x) if x as usize == k);
                let touch_b = matches!(e.b, End::Vx(x) if x as usize == k);
                if touch_a && touch_b {
                    selfs += 1;
                    deg += 2;
                    continue;
                }
                if touch_a || touch_b {
                    deg += 1;
                    let other = if touch_a { e.b } else { e.a };
                    match other {
                        End::Vx(_) => {}
                        p => ports.push(end_key(p)),
                    }
                }
            }
            ports.sort();
            format!("{:?}|{}|{}|{:?}", d.verts[k], deg, selfs, ports)
        })
        .collect();
    // neighborhood refinement rounds
    for _ in 0..3 {
        let mut next: Vec<String> = Vec::with_capacity(nv);
        for k in 0..nv {
            let mut nbrs: Vec<&str> = Vec::new();
            for e in &d.edges {
                let touch_a = matches!(e.a, End::Vx(x) if x as usize == k);
                let touch_b = matches!(e.b, End::Vx(x) if x as usize == k);
                if touch_a && touch_b {
                    continue;
                }
                let other = if touch_a {
                    Some(e.b)
                } else if touch_b {
                    Some(e.a)
                } else {
                    None
                };
                if let Some(End::Vx(x)) = other {
                    nbrs.push(&cls[x as usize]);
                }
            }
            nbrs.sort();
            next.push(format!("{}#{}", cls[k], nbrs.join(",")));
        }
        if next == cls {
            break;
        }
        cls = next;
    }
    cls
}
