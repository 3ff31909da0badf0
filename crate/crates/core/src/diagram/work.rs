//! Mutable working form of a diagram used by gluing and rewriting.
//!
//! Ports, junctions and vertices are nodes of a multigraph; junction nodes
//! have degree two and are spliced away, composing the symplectic arrows
//! along the way (`J·J = -1`, reversal = `-1`) and converting closed loops
//! into scalar factors (a plain loop is worth `n`, a loop through an odd
//! number of arrows traces `J` and vanishes).

use super::{Combination, Diagram, DiagramError, Edge, End, Family, Flavor, Signature, VertexKind};
use crate::diagram::rewrite::{simplify_raw, RewriteStats};
use crate::ratfunc::RationalFunc;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum WNode {
    InPort(u8),
    OutPort(u8),
    Junction,
    Vert(VertexKind),
    Dead,
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct WEdge {
    pub a: usize,
    pub b: usize,
    /// carries the symplectic form, directed a -> b
    pub j: bool,
    pub dead: bool,
}

/// Scratch diagram under surgery.
#[derive(Clone, Debug)]
pub(crate) struct Work {
    pub family: Family,
    pub sig: Signature,
    pub nodes: Vec<WNode>,
    pub edges: Vec<WEdge>,
    pub sign: i64,
    /// power of the loop value accumulated so far
    pub npow: u32,
    /// false once a J-trace loop kills the term
    pub alive: bool,
}

impl Work {
    pub fn from_diagram(d: &Diagram) -> Work {
        let p = d.strands();
        let mut nodes = Vec::with_capacity(2 * p + d.verts.len());
        for i in 0..p {
            nodes.push(WNode::InPort(i as u8));
        }
        for i in 0..p {
            nodes.push(WNode::OutPort(i as u8));
        }
        for k in &d.verts {
            nodes.push(WNode::Vert(*k));
        }
        let enc = |e: End| -> usize {
            match e {
                End::In(i) => i as usize,
                End::Out(i) => p + i as usize,
                End::Vx(k) => 2 * p + k as usize,
            }
        };
        let edges = d
            .edges
            .iter()
            .map(|e| WEdge {
                a: enc(e.a),
                b: enc(e.b),
                j: e.j,
                dead: false,
            })
            .collect();
        Work {
            family: d.family,
            sig: d.sig.clone(),
            nodes,
            edges,
            sign: 1,
            npow: 0,
            alive: true,
        }
    }

    pub fn add_node(&mut self, n: WNode) -> usize {
        self.nodes.push(n);
        self.nodes.len() - 1
    }

    pub fn add_edge(&mut self, a: usize, b: usize, j: bool) {
        self.edges.push(WEdge {
            a,
            b,
            j,
            dead: false,
        });
    }

    /// Indices of live edges incident to a node (self-edges listed twice).
    pub fn incident(&self, node: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if e.dead {
                continue;
            }
            if e.a == node {
                out.push(i);
            }
            if e.b == node {
                out.push(i);
            }
        }
        out
    }

    /// Re-attach the end of edge `ei` currently at `from` to `to`.
    /// For self-edges only one end is moved.
    pub fn retarget_one(&mut self, ei: usize, from: usize, to: usize) {
        let e = &mut self.edges[ei];
        if e.a == from {
            e.a = to;
        } else {
            debug_assert_eq!(e.b, from);
            e.b = to;
        }
    }

    /// Splice away all junction nodes, composing arrows and evaluating
    /// loops. Returns false if the term died (J-trace).
    pub fn resolve_junctions(&mut self) -> bool {
        loop {
            if !self.alive {
                return false;
            }
            let j = match self
                .nodes
                .iter()
                .position(|n| matches!(n, WNode::Junction))
            {
                None => return true,
                Some(j) => j,
            };
            let inc = self.incident(j);
            assert_eq!(inc.len(), 2, "junction must have degree 2");
            if inc[0] == inc[1] {
                // closed loop through this junction
                let e = self.edges[inc[0]];
                if e.j {
                    // tr J = 0
                    self.alive = false;
                    return false;
                }
                self.npow += 1;
                self.edges[inc[0]].dead = true;
                self.nodes[j] = WNode::Dead;
                continue;
            }
            let (i1, i2) = (inc[0], inc[1]);
            // orient e1 as (x -> j), e2 as (j -> y), with sign for reversals
            let e1 = self.edges[i1];
            let e2 = self.edges[i2];
            let (x, j1) = if e1.b == j {
                (e1.a, e1.j) // already x -> j
            } else {
                if e1.j {
                    self.sign = -self.sign;
                }
                (e1.b, e1.j)
            };
            let (y, j2) = if e2.a == j {
                (e2.b, e2.j)
            } else {
                if e2.j {
                    self.sign = -self.sign;
                }
                (e2.a, e2.j)
            };
            let j_total = j1 ^ j2;
            if j1 && j2 {
                self.sign = -self.sign;
            }
            self.edges[i1].dead = true;
            self.edges[i2].dead = true;
            self.nodes[j] = WNode::Dead;
            self.add_edge(x, y, j_total);
        }
    }

    /// Convert back to a (pre-canonical) diagram. All junctions must have
    /// been resolved.
    pub fn into_diagram(self) -> (Diagram, i64, u32) {
        let p = self.sig.strands();
        let _ = p;
        // map nodes to Ends; vertices renumbered densely
        let mut vmap = vec![usize::MAX; self.nodes.len()];
        let mut verts = Vec::new();
        for (i, n) in self.nodes.iter().enumerate() {
            if let WNode::Vert(k) = n {
                vmap[i] = verts.len();
                verts.push(*k);
            }
        }
        let conv = |node: usize| -> End {
            match self.nodes[node] {
                WNode::InPort(i) => End::In(i),
                WNode::OutPort(i) => End::Out(i),
                WNode::Vert(_) => End::Vx(vmap[node] as u8),
                WNode::Junction | WNode::Dead => panic!("unresolved node in into_diagram"),
            }
        };
        let edges = self
            .edges
            .iter()
            .filter(|e| !e.dead)
            .map(|e| Edge {
                a: conv(e.a),
                b: conv(e.b),
                j: e.j,
            })
            .collect();
        (
            Diagram {
                family: self.family,
                sig: self.sig.clone(),
                verts,
                edges,
            },
            self.sign,
            self.npow,
        )
    }

    /// Scalar prefactor accumulated so far: sign * loop_value^npow.
    pub fn prefactor(&self) -> RationalFunc {
        let mut c = RationalFunc::from_int(self.sign);
        let lv = RationalFunc::from_poly(self.family.loop_value());
        for _ in 0..self.npow {
            c = c.mul_ref(&lv);
        }
        c
    }
}

/// Concatenate `a ∘ b` (apply `b` first): glue `a`'s in-ports to `b`'s
/// out-ports, splice, and run the local rewrite system.
pub fn concatenate_raw(
    a: &Diagram,
    b: &Diagram,
    stats: &mut RewriteStats,
) -> Result<Combination, DiagramError> {
    if a.family != b.family {
        return Err(DiagramError::SignatureMismatch(format!(
            "family {} vs {}",
            a.family.name(),
            b.family.name()
        )));
    }
    if a.sig != b.sig {
        return Err(DiagramError::SignatureMismatch(
            "strand signatures differ".into(),
        ));
    }
    let p = a.strands();
    let mut w = Work {
        family: a.family,
        sig: a.sig.clone(),
        nodes: Vec::new(),
        edges: Vec::new(),
        sign: 1,
        npow: 0,
        alive: true,
    };
    // composite ports: in from b, out from a
    for i in 0..p {
        w.nodes.push(WNode::InPort(i as u8));
    }
    for i in 0..p {
        w.nodes.push(WNode::OutPort(i as u8));
    }
    // junctions between a.In(i) and b.Out(i)
    let junction_base = w.nodes.len();
    for _ in 0..p {
        w.nodes.push(WNode::Junction);
    }
    // vertices of a then b
    let a_vert_base = w.nodes.len();
    for k in &a.verts {
        w.nodes.push(WNode::Vert(*k));
    }
    let b_vert_base = w.nodes.len();
    for k in &b.verts {
        w.nodes.push(WNode::Vert(*k));
    }
    let enc_a = |e: End| -> usize {
        match e {
            End::In(i) => junction_base + i as usize,
            End::Out(i) => p + i as usize,
            End::Vx(k) => a_vert_base + k as usize,
        }
    };
    let enc_b = |e: End| -> usize {
        match e {
            End::In(i) => i as usize,
            End::Out(i) => junction_base + i as usize,
            End::Vx(k) => b_vert_base + k as usize,
        }
    };
    for e in &a.edges {
        w.add_edge(enc_a(e.a), enc_a(e.b), e.j);
    }
    for e in &b.edges {
        w.add_edge(enc_b(e.a), enc_b(e.b), e.j);
    }
    if !w.resolve_junctions() {
        return Ok(Combination::zero());
    }
    let pre = w.prefactor();
    let (d, sign, npow) = w.into_diagram();
    debug_assert_eq!(sign, 1 * sign);
    let _ = (sign, npow);
    Ok(simplify_raw(d, pre, stats))
}

/// Close the trace: glue each out-port to the matching in-port. The result
/// is a scalar if the closed diagram reduces fully under the local rules.
pub fn close_trace_raw(d: &Diagram, stats: &mut RewriteStats) -> Result<RationalFunc, DiagramError> {
    if d.family.oriented() {
        // flavor sanity: closing In(i) onto Out(i) is always flavor-safe
    }
    let p = d.strands();
    let mut w = Work::from_diagram(d);
    // ports become junctions pairwise
    for i in 0..p {
        // merge OutPort(i) node into InPort(i) node, both become one junction
        let in_node = i;
        let out_node = p + i;
        w.nodes[in_node] = WNode::Junction;
        w.nodes[out_node] = WNode::Dead;
        for e in w.edges.iter_mut() {
            if e.a == out_node {
                e.a = in_node;
            }
            if e.b == out_node {
                e.b = in_node;
            }
        }
    }
    let mut closed = w.clone();
    closed.sig = Signature(vec![]);
    if !closed.resolve_junctions() {
        return Ok(RationalFunc::zero());
    }
    let pre = closed.prefactor();
    let (diag, _, _) = closed.into_diagram();
    let comb = simplify_raw(diag, pre, stats);
    let mut total = RationalFunc::zero();
    for (d, c) in comb.iter() {
        if d.verts.is_empty() && d.edges.is_empty() {
            total = total.add_ref(c);
        } else {
            return Err(DiagramError::IrreducibleClosure(format!(
                "closure left {} vertices",
                d.verts.len()
            )));
        }
    }
    Ok(total)
}

/// Tensor with an identity strand. If `at_front` the new strand becomes
/// strand 0 and existing strands shift up; otherwise it is appended.
pub fn tensor_identity(d: &Diagram, flavor: Flavor, at_front: bool) -> Diagram {
    let p = d.strands();
    let shift = if at_front { 1u8 } else { 0 };
    let new_idx = if at_front { 0u8 } else { p as u8 };
    let mut sig = d.sig.0.clone();
    if at_front {
        sig.insert(0, flavor);
    } else {
        sig.push(flavor);
    }
    let remap = |e: End| -> End {
        match e {
            End::In(i) => End::In(i + shift),
            End::Out(i) => End::Out(i + shift),
            End::Vx(k) => End::Vx(k),
        }
    };
    let mut edges: Vec<Edge> = d
        .edges
        .iter()
        .map(|e| Edge {
            a: remap(e.a),
            b: remap(e.b),
            j: e.j,
        })
        .collect();
    edges.push(Edge {
        a: End::In(new_idx),
        b: End::Out(new_idx),
        j: false,
    });
    Diagram {
        family: d.family,
        sig: Signature(sig),
        verts: d.verts.clone(),
        edges,
    }
}
