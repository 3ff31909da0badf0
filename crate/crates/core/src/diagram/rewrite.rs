//! The terminating local rewrite system.
//!
//! Rules, applied to fixpoint (each strictly decreases the vertex count):
//!
//! * loops → factor `n` (done during splicing; a loop through an odd number
//!   of symplectic arrows traces `J` and kills the term);
//! * e6: a `d`–`d̄` pair sharing two edges contracts to a line
//!   (the normalization `d̄·d = δ` of the cubic invariant);
//! * e6: an alternating 4-cycle of `d̄, d, d̄, d` single contractions
//!   rewrites by the Cvitanović primitiveness relation into a fresh
//!   `d̄`–`d` pair and two delta wirings, with coefficients `-m/(2m+4)`
//!   and `1/(2m+4)`;
//! * e7: two quartic vertices joined by two (or more) arrows rewrite by
//!   the quartic primitiveness relation into `6(m+2)` times a single
//!   vertex plus `18(m+3)` times the two arrow pairings;
//! * e7: a vertex closed on its own arrow is zero (symmetric tensor
//!   against the antisymmetric form).

use super::work::{WNode, Work};
use super::{canonicalize, Combination, Diagram, End, Family, VertexKind};
use crate::ratfunc::{MultiPoly, RationalFunc};

/// Counters for the proof transcript.
#[derive(Clone, Debug, Default)]
pub struct RewriteStats {
    /// e6 two-edge `d`–`d̄` contractions (cubic normalization)
    pub pair_collapse: u64,
    /// e6 alternating 4-cycle reductions (cubic primitiveness)
    pub cycle4: u64,
    /// e7 double-arrow vertex fusions (quartic primitiveness)
    pub d4_master: u64,
    /// terms killed by a symmetric vertex closing on an arrow
    pub arrow_zero: u64,
}

impl RewriteStats {
    pub fn merge(&mut self, other: &RewriteStats) {
        self.pair_collapse += other.pair_collapse;
        self.cycle4 += other.cycle4;
        self.d4_master += other.d4_master;
        self.arrow_zero += other.arrow_zero;
    }

    pub fn any(&self) -> bool {
        self.pair_collapse + self.cycle4 + self.d4_master + self.arrow_zero > 0
    }
}

fn m_poly() -> MultiPoly {
    MultiPoly::var(0)
}

fn rf(num: MultiPoly, den: MultiPoly) -> RationalFunc {
    RationalFunc::new(num, den)
}

/// Apply the local rule system to fixpoint, starting from a pre-canonical
/// diagram with a scalar prefactor, and return the canonical combination.
pub fn simplify_raw(d: Diagram, coeff: RationalFunc, stats: &mut RewriteStats) -> Combination {
    let mut out = Combination::zero();
    let mut work: Vec<(Diagram, RationalFunc)> = vec![(d, coeff)];
    while let Some((d, c)) = work.pop() {
        if c.is_zero() {
            continue;
        }
        // zero check: symmetric vertex closed on its own arrow
        if d.edges.iter().any(|e| e.j && e.a == e.b) {
            stats.arrow_zero += 1;
            continue;
        }
        let fired = match d.family {
            Family::E6 => try_e6_rules(&d, &c, &mut work, stats),
            Family::E7 => try_e7_rules(&d, &c, &mut work, stats),
            _ => false,
        };
        if fired {
            continue;
        }
        match canonicalize(&d) {
            None => {
                stats.arrow_zero += 1;
            }
            Some((cd, sign)) => {
                out.add_term(cd, c.mul_ref(&RationalFunc::from_int(sign)));
            }
        }
    }
    out
}

/// Spec operation: exhaustively apply the local rules to one diagram.
pub fn apply_local_rewrites(d: &Diagram) -> Combination {
    simplify_raw(d.clone(), RationalFunc::one(), &mut RewriteStats::default())
}

/// Edges shared by a pair of vertices (indices into `d.edges`).
fn shared_edges(d: &Diagram, v1: usize, v2: usize) -> Vec<usize> {
    d.edges
        .iter()
        .enumerate()
        .filter(|(_, e)| {
            let touches = |end: End, v: usize| matches!(end, End::Vx(k) if k as usize == v);
            (touches(e.a, v1) && touches(e.b, v2)) || (touches(e.a, v2) && touches(e.b, v1))
        })
        .map(|(i, _)| i)
        .collect()
}

/// Remaining edge-ends at a vertex, excluding a set of dead edges.
/// Returned as (edge index, end-is-a) in scan order.
fn stub_ends(d: &Diagram, v: usize, dead: &[usize]) -> Vec<(usize, bool)> {
    let mut out = Vec::new();
    for (i, e) in d.edges.iter().enumerate() {
        if dead.contains(&i) {
            continue;
        }
        if matches!(e.a, End::Vx(k) if k as usize == v) {
            out.push((i, true));
        }
        if matches!(e.b, End::Vx(k) if k as usize == v) {
            out.push((i, false));
        }
    }
    out
}

fn work_without(d: &Diagram, dead_edges: &[usize]) -> Work {
    let mut w = Work::from_diagram(d);
    for &i in dead_edges {
        w.edges[i].dead = true;
    }
    w
}

fn node_of_vertex(d: &Diagram, v: usize) -> usize {
    2 * d.strands() + v
}

fn emit(w: Work, scale: &RationalFunc, c: &RationalFunc, work: &mut Vec<(Diagram, RationalFunc)>) {
    let mut w = w;
    if !w.resolve_junctions() {
        return;
    }
    let pre = w.prefactor();
    let (nd, _, _) = w.into_diagram();
    work.push((nd, c.mul_ref(scale).mul_ref(&pre)));
}

fn try_e6_rules(
    d: &Diagram,
    c: &RationalFunc,
    work: &mut Vec<(Diagram, RationalFunc)>,
    stats: &mut RewriteStats,
) -> bool {
    let nv = d.verts.len();
    // rule: d-dbar pair with >= 2 shared edges collapses to a line
    for v1 in 0..nv {
        for v2 in 0..nv {
            if d.verts[v1] != VertexKind::D3Bar || d.verts[v2] != VertexKind::D3 {
                continue;
            }
            let sh = shared_edges(d, v1, v2);
            if sh.len() >= 2 {
                let dead = [sh[0], sh[1]];
                let mut w = work_without(d, &dead);
                let jn = w.add_node(WNode::Junction);
                let n1 = node_of_vertex(d, v1);
                let n2 = node_of_vertex(d, v2);
                for (ei, is_a) in stub_ends(d, v1, &dead) {
                    let from = if is_a { w.edges[ei].a } else { w.edges[ei].b };
                    debug_assert_eq!(from, n1);
                    if is_a {
                        w.edges[ei].a = jn;
                    } else {
                        w.edges[ei].b = jn;
                    }
                }
                for (ei, is_a) in stub_ends(d, v2, &dead) {
                    if is_a {
                        debug_assert_eq!(w.edges[ei].a, n2);
                        w.edges[ei].a = jn;
                    } else {
                        debug_assert_eq!(w.edges[ei].b, n2);
                        w.edges[ei].b = jn;
                    }
                }
                w.nodes[n1] = WNode::Dead;
                w.nodes[n2] = WNode::Dead;
                stats.pair_collapse += 1;
                emit(w, &RationalFunc::one(), c, work);
                return true;
            }
        }
    }
    // rule: alternating 4-cycle (Cvitanović primitiveness)
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
                    let c1 = shared_edges(d, b1, w2);
                    let c2 = shared_edges(d, w2, b3);
                    let c3 = shared_edges(d, b3, w4);
                    let c4 = shared_edges(d, w4, b1);
                    if c1.len() != 1 || c2.len() != 1 || c3.len() != 1 || c4.len() != 1 {
                        continue;
                    }
                    apply_cycle4(d, c, [b1, w2, b3, w4], [c1[0], c2[0], c3[0], c4[0]], work);
                    stats.cycle4 += 1;
                    return true;
                }
            }
        }
    }
    false
}

/// Lemma-4.1-shaped rewrite of the cycle `b1 – w2 – b3 – w4 –`.
fn apply_cycle4(
    d: &Diagram,
    c: &RationalFunc,
    verts: [usize; 4],
    cyc: [usize; 4],
    work: &mut Vec<(Diagram, RationalFunc)>,
) {
    let [b1, w2, b3, w4] = verts;
    let dead: Vec<usize> = cyc.to_vec();
    let two_m_plus_4 = &(&MultiPoly::int(2) * &m_poly()) + &MultiPoly::int(4);
    let coeff_e = rf(m_poly().neg_ref(), two_m_plus_4.clone());
    let coeff_delta = rf(MultiPoly::one(), two_m_plus_4);

    let stub = |v: usize| -> (usize, bool) {
        let s = stub_ends(d, v, &dead);
        debug_assert_eq!(s.len(), 1, "cycle vertex must have exactly one stub");
        s[0]
    };
    let (s1, s1a) = stub(b1);
    let (s2, s2a) = stub(w2);
    let (s3, s3a) = stub(b3);
    let (s4, s4a) = stub(w4);

    let retarget = |w: &mut Work, (ei, is_a): (usize, bool), to: usize| {
        if is_a {
            w.edges[ei].a = to;
        } else {
            w.edges[ei].b = to;
        }
    };

    // term 1: fresh dbar-d pair wired (b1,b3 | w2,w4), coefficient -m/(2m+4)
    {
        let mut w = work_without(d, &dead);
        let nb = w.add_node(WNode::Vert(VertexKind::D3Bar));
        let nw = w.add_node(WNode::Vert(VertexKind::D3));
        retarget(&mut w, (s1, s1a), nb);
        retarget(&mut w, (s3, s3a), nb);
        retarget(&mut w, (s2, s2a), nw);
        retarget(&mut w, (s4, s4a), nw);
        w.add_edge(nb, nw, false);
        for v in verts {
            let n = node_of_vertex(d, v);
            w.nodes[n] = WNode::Dead;
        }
        emit(w, &coeff_e, c, work);
    }
    // delta terms: pair each dbar stub with a cycle-adjacent d stub
    for (pair_a, pair_b) in [((s1, s1a), (s2, s2a)), ((s1, s1a), (s4, s4a))] {
        let (other_a, other_b) = if pair_a.0 == s1 && pair_b.0 == s2 {
            ((s3, s3a), (s4, s4a))
        } else {
            ((s3, s3a), (s2, s2a))
        };
        let mut w = work_without(d, &dead);
        let j1 = w.add_node(WNode::Junction);
        let j2 = w.add_node(WNode::Junction);
        retarget(&mut w, pair_a, j1);
        retarget(&mut w, pair_b, j1);
        retarget(&mut w, other_a, j2);
        retarget(&mut w, other_b, j2);
        for v in verts {
            let n = node_of_vertex(d, v);
            w.nodes[n] = WNode::Dead;
        }
        emit(w, &coeff_delta, c, work);
    }
}

fn try_e7_rules(
    d: &Diagram,
    c: &RationalFunc,
    work: &mut Vec<(Diagram, RationalFunc)>,
    stats: &mut RewriteStats,
) -> bool {
    let nv = d.verts.len();
    for v1 in 0..nv {
        for v2 in (v1 + 1)..nv {
            let sh = shared_edges(d, v1, v2);
            if sh.len() >= 2 {
                apply_d4_master(d, c, v1, v2, &sh, work);
                stats.d4_master += 1;
                return true;
            }
        }
    }
    false
}

/// Quartic primitiveness: two `d4` vertices joined by (at least) two
/// arrows rewrite into `6(m+2)` times a merged vertex plus `18(m+3)`
/// times the two stub pairings (each new pairing carries an arrow from
/// the `v1` side to the `v2` side).
fn apply_d4_master(
    d: &Diagram,
    c: &RationalFunc,
    v1: usize,
    v2: usize,
    sh: &[usize],
    work: &mut Vec<(Diagram, RationalFunc)>,
) {
    let n1 = node_of_vertex(d, v1);
    let n2 = node_of_vertex(d, v2);
    let dead = [sh[0], sh[1]];
    // direction normalization: both selected arrows must point v2 -> v1
    let mut dir_sign = 1i64;
    for &ei in &dead {
        let e = &d.edges[ei];
        debug_assert!(e.j, "vertex-vertex edges always carry the form");
        let a_at_v1 = matches!(e.a, End::Vx(k) if k as usize == v1);
        if a_at_v1 {
            dir_sign = -dir_sign;
        }
    }
    let base = RationalFunc::from_int(dir_sign);
    let m = m_poly();
    let coeff_merge = base.mul_ref(&RationalFunc::from_poly(
        (&(&MultiPoly::int(6) * &m) + &MultiPoly::int(12)).clone(),
    ));
    let coeff_pair = base.mul_ref(&RationalFunc::from_poly(
        (&(&MultiPoly::int(18) * &m) + &MultiPoly::int(54)).clone(),
    ));

    let stubs1 = stub_ends(d, v1, &dead);
    let stubs2 = stub_ends(d, v2, &dead);
    debug_assert_eq!(stubs1.len(), 2);
    debug_assert_eq!(stubs2.len(), 2);

    let retarget = |w: &mut Work, (ei, is_a): (usize, bool), to: usize| {
        if is_a {
            w.edges[ei].a = to;
        } else {
            w.edges[ei].b = to;
        }
    };

    // merged-vertex term
    {
        let mut w = work_without(d, &dead);
        let nw = w.add_node(WNode::Vert(VertexKind::D4));
        for &s in &stubs1 {
            retarget(&mut w, s, nw);
        }
        for &s in &stubs2 {
            retarget(&mut w, s, nw);
        }
        w.nodes[n1] = WNode::Dead;
        w.nodes[n2] = WNode::Dead;
        emit(w, &coeff_merge, c, work);
    }
    // pairing terms: (x->c, y->d) and (x->d, y->c), arrows v1-side -> v2-side
    for swap in [false, true] {
        let (p1, p2) = if swap {
            ((stubs1[0], stubs2[1]), (stubs1[1], stubs2[0]))
        } else {
            ((stubs1[0], stubs2[0]), (stubs1[1], stubs2[1]))
        };
        let mut w = work_without(d, &dead);
        for (sa, sb) in [p1, p2] {
            let ja = w.add_node(WNode::Junction);
            let jb = w.add_node(WNode::Junction);
            retarget(&mut w, sa, ja);
            retarget(&mut w, sb, jb);
            w.add_edge(ja, jb, true);
        }
        w.nodes[n1] = WNode::Dead;
        w.nodes[n2] = WNode::Dead;
        emit(w, &coeff_pair, c, work);
    }
}
