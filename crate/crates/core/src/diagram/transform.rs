//! External-leg transformations: port permutations, conjugation, the 60°
//! rotations of rank-six symplectic symbols, the sandwich transforms
//! `T1`/`T2` of the e6 calculus, and the 90° crossing map between the
//! `V⊗V` and `V⊗V̄` channels.

use super::rewrite::{simplify_raw, RewriteStats};
use super::{Combination, Diagram, DiagramError, Edge, End, Family, Flavor, Signature, VertexKind};
use crate::ratfunc::RationalFunc;

/// The supported leg transforms.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LegTransform {
    /// sandwich by crossings: out-legs 0,1 swapped, in-legs 1,2 swapped
    T1,
    /// sandwich by crossings: out-legs 1,2 swapped, in-legs 0,1 swapped
    T2,
    /// anticlockwise rotation by k*60 degrees (rank six, self-dual families)
    Rot60(u8),
    /// 90-degree crossing between End(V⊗V) and End(V⊗V̄) (e6/su families)
    Cross,
    /// conjugate-transpose: swap V and V̄, d and d̄, in- and out-ports
    Conjugate,
}

/// Permute external legs: the strand entering in-port `i` is re-attached to
/// in-port `in_perm[i]`, and likewise for out-ports. Signs from arrow
/// normalization are absorbed into the coefficients.
pub fn leg_permute(d: &Diagram, out_perm: &[usize], in_perm: &[usize]) -> Combination {
    let remap = |e: End| -> End {
        match e {
            End::In(i) => End::In(in_perm[i as usize] as u8),
            End::Out(i) => End::Out(out_perm[i as usize] as u8),
            End::Vx(k) => End::Vx(k),
        }
    };
    let moved = Diagram {
        family: d.family,
        sig: d.sig.clone(),
        verts: d.verts.clone(),
        edges: d
            .edges
            .iter()
            .map(|e| Edge {
                a: remap(e.a),
                b: remap(e.b),
                j: e.j,
            })
            .collect(),
    };
    simplify_raw(moved, RationalFunc::one(), &mut RewriteStats::default())
}

fn transposition(p: usize, i: usize, j: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..p).collect();
    perm.swap(i, j);
    perm
}

/// Apply a leg transform to a single diagram, producing a combination
/// (transforms are linear; signs fold into coefficients).
pub fn leg_transform(d: &Diagram, t: LegTransform) -> Result<Combination, DiagramError> {
    let p = d.strands();
    match t {
        LegTransform::T1 | LegTransform::T2 => {
            if p != 3 {
                return Err(DiagramError::RankMismatch {
                    transform: format!("{t:?}"),
                    expected: 6,
                    actual: 2 * p,
                });
            }
            let (op, ip) = match t {
                LegTransform::T1 => (transposition(3, 0, 1), transposition(3, 1, 2)),
                _ => (transposition(3, 1, 2), transposition(3, 0, 1)),
            };
            Ok(leg_permute(d, &op, &ip))
        }
        LegTransform::Rot60(k) => {
            if p != 3 {
                return Err(DiagramError::RankMismatch {
                    transform: "Rot60".into(),
                    expected: 6,
                    actual: 2 * p,
                });
            }
            if d.family.oriented() {
                return Err(DiagramError::Unsupported(
                    "60-degree rotations need self-dual strands".into(),
                ));
            }
            let mut out = Combination::singleton(d.clone(), RationalFunc::one());
            for _ in 0..(k % 6) {
                let mut next = Combination::zero();
                for (dd, c) in out.iter() {
                    let r = rot60_once(dd);
                    next = next.add(&r.scale(c));
                }
                out = next;
            }
            Ok(out)
        }
        LegTransform::Cross => {
            if p != 2 {
                return Err(DiagramError::RankMismatch {
                    transform: "Cross".into(),
                    expected: 4,
                    actual: 2 * p,
                });
            }
            if !d.family.oriented() {
                return Err(DiagramError::Unsupported(
                    "Cross relates the V⊗V and V⊗V̄ channels of oriented families".into(),
                ));
            }
            Ok(cross_once(d))
        }
        LegTransform::Conjugate => Ok(conjugate(d)),
    }
}

/// Conjugate-transpose: flavors and vertex kinds conjugated, in- and
/// out-ports exchanged. Maps relations to relations.
pub fn conjugate(d: &Diagram) -> Combination {
    let remap = |e: End| -> End {
        match e {
            End::In(i) => End::Out(i),
            End::Out(i) => End::In(i),
            End::Vx(k) => End::Vx(k),
        }
    };
    let verts = d
        .verts
        .iter()
        .map(|k| match k {
            VertexKind::D3 => VertexKind::D3Bar,
            VertexKind::D3Bar => VertexKind::D3,
            VertexKind::D4 => VertexKind::D4,
        })
        .collect();
    let sig = if d.family.oriented() {
        d.sig.clone()
    } else {
        d.sig.clone()
    };
    let moved = Diagram {
        family: d.family,
        sig,
        verts,
        edges: d
            .edges
            .iter()
            .map(|e| Edge {
                a: remap(e.a),
                b: remap(e.b),
                j: e.j,
            })
            .collect(),
    };
    simplify_raw(moved, RationalFunc::one(), &mut RewriteStats::default())
}

/// One anticlockwise 60° step on a rank-six self-dual symbol.
///
/// Hexagon positions in cyclic order: Out0, Out1, Out2, In2, In1, In0.
/// The leg at position h re-attaches at position h+1. Crossing a seam
/// between the out- and in-sides raises or lowers the leg with the
/// symplectic form; the two seams carry mutually inverse arrows so that
/// six steps compose to the identity. Implemented by gluing a corrector
/// strand onto every leg and splicing, so all signs come from the arrow
/// composition rules.
fn rot60_once(d: &Diagram) -> Combination {
    use super::work::{WNode, Work};
    let p = d.strands();
    debug_assert_eq!(p, 3);
    let mut w = Work::from_diagram(d);
    // Old port nodes become junctions; fresh ports are wired one hexagon
    // step around.
    let old_in: Vec<usize> = (0..p).collect();
    let old_out: Vec<usize> = (p..2 * p).collect();
    for &n in old_in.iter().chain(old_out.iter()) {
        w.nodes[n] = WNode::Junction;
    }
    let hex_node = |w: &Work, h: usize| -> usize {
        let _ = w;
        if h < 3 {
            old_out[h]
        } else {
            old_in[5 - h]
        }
    };
    let mut new_port = Vec::new();
    for h in 0..6 {
        let n = if h < 3 {
            w.add_node(WNode::OutPort(h as u8))
        } else {
            w.add_node(WNode::InPort((5 - h) as u8))
        };
        new_port.push(n);
    }
    for h in 0..6usize {
        let from = hex_node(&w, h);
        let to = new_port[(h + 1) % 6];
        match h {
            // Out2 -> In2 seam: lower the leg with J (arrow old -> new)
            2 => w.add_edge(from, to, true),
            // In0 -> Out0 seam: raise the leg with the inverse arrow
            5 => w.add_edge(to, from, true),
            _ => w.add_edge(from, to, false),
        }
    }
    if !w.resolve_junctions() {
        return Combination::zero();
    }
    let pre = w.prefactor();
    let (moved, _, _) = w.into_diagram();
    simplify_raw(moved, pre, &mut RewriteStats::default())
}

/// The 90° crossing map. On the `V⊗V` channel it sends the identity to the
/// annihilation pairing, the transposition to the mixed identity and the
/// cubic pair symbol to the crossed-channel cubic symbol; on `V⊗V̄` it is
/// the inverse map, so that four applications are the identity.
fn cross_once(d: &Diagram) -> Combination {
    let mixed = Signature::mixed();
    let vv = Signature::all_v(2);
    let (map, new_sig): (fn(End) -> End, Signature) = if d.sig == vv {
        (
            |e: End| match e {
                End::In(0) => End::In(0),
                End::Out(0) => End::In(1),
                End::In(1) => End::Out(1),
                End::Out(1) => End::Out(0),
                other => other,
            },
            mixed,
        )
    } else if d.sig == mixed {
        (
            |e: End| match e {
                End::In(0) => End::In(0),
                End::In(1) => End::Out(0),
                End::Out(1) => End::In(1),
                End::Out(0) => End::Out(1),
                other => other,
            },
            vv,
        )
    } else {
        return Combination::zero();
    };
    let moved = Diagram {
        family: d.family,
        sig: new_sig,
        verts: d.verts.clone(),
        edges: d
            .edges
            .iter()
            .map(|e| Edge {
                a: map(e.a),
                b: map(e.b),
                j: e.j,
            })
            .collect(),
    };
    simplify_raw(moved, RationalFunc::one(), &mut RewriteStats::default())
}

/// Linear extension of a leg transform over a combination.
pub fn transform_combination(
    comb: &Combination,
    t: LegTransform,
) -> Result<Combination, DiagramError> {
    let mut out = Combination::zero();
    for (d, c) in comb.iter() {
        out = out.add(&leg_transform(d, t)?.scale(c));
    }
    Ok(out)
}
