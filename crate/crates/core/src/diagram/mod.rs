//! Birdtrack diagrams: decorated wiring graphs for the `su`, `so`, `sp`,
//! `e6` and `e7` families.
//!
//! A diagram is an operator on `V⊗p`: it has `p` in-ports and `p` out-ports
//! (the strand signature records `V` versus `V̄` for the oriented families)
//! plus internal trivalent (`d3`, `d3bar`) or quadrivalent (`d4`) invariant
//! vertices. Edges are Kronecker deltas; for the symplectic families an
//! edge may carry the symplectic form `J`, recorded as a direction (the
//! arrow) since `J` is antisymmetric. Whether an edge carries `J` is forced
//! by the kinds of its two endpoints, so only the arrow direction is data.
//!
//! Stored diagrams are canonical representatives: loop-free, with a
//! deterministic vertex labelling and arrow orientation. Canonicalization
//! reports the sign picked up by arrow reversals; a diagram equal to minus
//! itself (a symmetric vertex closed on an antisymmetric arrow) is zero.

mod ascii;
mod canon;
mod dot;
mod rewrite;
mod transform;
mod work;

pub use ascii::{parse_diagram, serialize_diagram};
pub use canon::canonicalize;
pub use dot::to_dot;
pub use rewrite::{apply_local_rewrites, simplify_raw, RewriteStats};
pub use transform::{conjugate, leg_permute, leg_transform, transform_combination, LegTransform};
pub use work::{close_trace_raw, concatenate_raw, tensor_identity};

use crate::ratfunc::{MultiPoly, RationalFunc};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("malformed wiring: {0}")]
    MalformedWiring(String),
    #[error("orientation clash: {0}")]
    OrientationClash(String),
    #[error("signature mismatch: {0}")]
    SignatureMismatch(String),
    #[error("closure left an irreducible diagram: {0}")]
    IrreducibleClosure(String),
    #[error("rank mismatch: transform {transform} needs rank {expected}, got {actual}")]
    RankMismatch {
        transform: String,
        expected: usize,
        actual: usize,
    },
    #[error("unsupported operation: {0}")]
    Unsupported(String),
}

/// The five diagram families in scope.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash, Serialize, Deserialize)]
pub enum Family {
    Su,
    So,
    Sp,
    E6,
    E7,
}

impl Family {
    /// Families whose strands carry an orientation (`V` vs `V̄`).
    pub fn oriented(self) -> bool {
        matches!(self, Family::Su | Family::E6)
    }

    /// Families whose pairings use the antisymmetric symplectic form.
    pub fn symplectic(self) -> bool {
        matches!(self, Family::Sp | Family::E7)
    }

    /// The scalar value of a closed plain loop, as a polynomial in the
    /// series parameter (`n` for the classical families, `m` for the
    /// exceptional ones, where `n = 3m+3` or `n = 6m+8`).
    pub fn loop_value(self) -> MultiPoly {
        let n = MultiPoly::var(0);
        match self {
            Family::Su | Family::So | Family::Sp => n,
            Family::E6 => &(&MultiPoly::int(3) * &n) + &MultiPoly::int(3),
            Family::E7 => &(&MultiPoly::int(6) * &n) + &MultiPoly::int(8),
        }
    }

    pub fn vertex_kind_allowed(self, k: VertexKind) -> bool {
        match self {
            Family::E6 => matches!(k, VertexKind::D3 | VertexKind::D3Bar),
            Family::E7 => matches!(k, VertexKind::D4),
            _ => false,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Su => "su",
            Family::So => "so",
            Family::Sp => "sp",
            Family::E6 => "e6",
            Family::E7 => "e7",
        }
    }
}

/// Strand orientation; meaningful only for the oriented families.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash, Serialize, Deserialize)]
pub enum Flavor {
    V,
    Vbar,
}

impl Flavor {
    pub fn conj(self) -> Flavor {
        match self {
            Flavor::V => Flavor::Vbar,
            Flavor::Vbar => Flavor::V,
        }
    }
}

/// Ordered list of strand flavors; the same signature applies to the in-
/// and out-ports of an operator diagram.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash, Serialize, Deserialize)]
pub struct Signature(pub Vec<Flavor>);

impl Signature {
    pub fn all_v(p: usize) -> Self {
        Signature(vec![Flavor::V; p])
    }

    /// The mixed two-strand signature `V ⊗ V̄` of the e6 crossed channel.
    pub fn mixed() -> Self {
        Signature(vec![Flavor::V, Flavor::Vbar])
    }

    pub fn strands(&self) -> usize {
        self.0.len()
    }

    pub fn conj(&self) -> Signature {
        Signature(self.0.iter().map(|f| f.conj()).collect())
    }
}

/// Internal vertex kinds: the cubic invariant `d`, its conjugate `d̄`,
/// and the quartic invariant of the e7 series.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash, Serialize, Deserialize)]
pub enum VertexKind {
    D3,
    D3Bar,
    D4,
}

impl VertexKind {
    pub fn arity(self) -> usize {
        match self {
            VertexKind::D3 | VertexKind::D3Bar => 3,
            VertexKind::D4 => 4,
        }
    }
}

/// Endpoint of an edge: an external port or an internal vertex (the slots
/// of a vertex are interchangeable, so only the vertex index is kept).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash, Serialize, Deserialize)]
pub enum End {
    In(u8),
    Out(u8),
    Vx(u8),
}

/// An edge; when it carries the symplectic form the direction is `a → b`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub a: End,
    pub b: End,
    pub j: bool,
}

/// A canonical birdtrack diagram.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash, Serialize, Deserialize)]
pub struct Diagram {
    pub family: Family,
    pub sig: Signature,
    pub verts: Vec<VertexKind>,
    pub edges: Vec<Edge>,
}

impl Diagram {
    pub fn strands(&self) -> usize {
        self.sig.strands()
    }

    /// Number of invariant vertices of each order; `(d3-pairs or d4 count)`
    /// used as the grading of the centralizer bases.
    pub fn order(&self) -> usize {
        match self.family {
            Family::E6 => self.verts.len() / 2,
            Family::E7 => self.verts.len(),
            _ => 0,
        }
    }

    /// Character of the delta-line end sitting at an endpoint (oriented
    /// families): `true` for the upper slot of the line's Kronecker delta.
    /// A line end contracting into `d` (all indices lower) must be upper,
    /// one contracting into `d̄` must be lower; at a port the line end is
    /// the operator index exposed there.
    pub fn end_is_upper(&self, e: End) -> bool {
        match e {
            End::In(i) => self.sig.0[i as usize] == Flavor::Vbar,
            End::Out(i) => self.sig.0[i as usize] == Flavor::V,
            End::Vx(k) => self.verts[k as usize] == VertexKind::D3,
        }
    }

    /// The forced `J`-parity of an edge for the symplectic families.
    pub fn expected_j(&self, a: End, b: End) -> bool {
        fn grade(d: &Diagram, e: End) -> u8 {
            match e {
                End::In(_) => 1,
                End::Out(_) => 0,
                End::Vx(_) => {
                    let _ = d;
                    0
                }
            }
        }
        (grade(self, a) + grade(self, b) + 1) % 2 == 1
    }

    /// Validate structural invariants; used by `make_diagram` and the
    /// deserializers.
    pub fn validate(&self) -> Result<(), DiagramError> {
        let p = self.strands();
        let mut port_deg = vec![0usize; 2 * p];
        let mut vert_deg = vec![0usize; self.verts.len()];
        for e in &self.edges {
            for end in [e.a, e.b] {
                match end {
                    End::In(i) => {
                        if (i as usize) >= p {
                            return Err(DiagramError::MalformedWiring(format!(
                                "in-port {i} out of range"
                            )));
                        }
                        port_deg[i as usize] += 1;
                    }
                    End::Out(i) => {
                        if (i as usize) >= p {
                            return Err(DiagramError::MalformedWiring(format!(
                                "out-port {i} out of range"
                            )));
                        }
                        port_deg[p + i as usize] += 1;
                    }
                    End::Vx(k) => {
                        if (k as usize) >= self.verts.len() {
                            return Err(DiagramError::MalformedWiring(format!(
                                "vertex {k} out of range"
                            )));
                        }
                        vert_deg[k as usize] += 1;
                    }
                }
            }
        }
        if let Some(i) = port_deg.iter().position(|&d| d != 1) {
            return Err(DiagramError::MalformedWiring(format!(
                "port {i} has degree {}",
                port_deg[i]
            )));
        }
        for (k, kind) in self.verts.iter().enumerate() {
            if !self.family.vertex_kind_allowed(*kind) {
                return Err(DiagramError::MalformedWiring(format!(
                    "vertex kind {kind:?} not allowed in family {}",
                    self.family.name()
                )));
            }
            if vert_deg[k] != kind.arity() {
                return Err(DiagramError::MalformedWiring(format!(
                    "vertex {k} has degree {} (arity {})",
                    vert_deg[k],
                    kind.arity()
                )));
            }
        }
        for e in &self.edges {
            if self.family.oriented() {
                if e.j {
                    return Err(DiagramError::OrientationClash(
                        "oriented families carry no symplectic arrows".into(),
                    ));
                }
                let ua = self.end_is_upper(e.a);
                let ub = self.end_is_upper(e.b);
                if ua == ub {
                    return Err(DiagramError::OrientationClash(format!(
                        "edge {:?}-{:?} joins two {} ends",
                        e.a,
                        e.b,
                        if ua { "upper" } else { "lower" }
                    )));
                }
            } else if self.family.symplectic() {
                if e.j != self.expected_j(e.a, e.b) {
                    return Err(DiagramError::OrientationClash(format!(
                        "edge {:?}-{:?} has wrong J-parity",
                        e.a, e.b
                    )));
                }
            } else if e.j {
                return Err(DiagramError::OrientationClash(
                    "so-family edges carry no arrows".into(),
                ));
            }
        }
        Ok(())
    }

    /// The identity diagram on a signature.
    pub fn identity(family: Family, sig: Signature) -> Diagram {
        let p = sig.strands();
        let edges = (0..p)
            .map(|i| Edge {
                a: End::In(i as u8),
                b: End::Out(i as u8),
                j: false,
            })
            .collect();
        Diagram {
            family,
            sig,
            verts: vec![],
            edges,
        }
    }

    /// Permutation diagram: strand at in-port `i` exits at out-port `perm[i]`.
    pub fn permutation(family: Family, sig: Signature, perm: &[usize]) -> Diagram {
        let edges = perm
            .iter()
            .enumerate()
            .map(|(i, &o)| Edge {
                a: End::In(i as u8),
                b: End::Out(o as u8),
                j: false,
            })
            .collect();
        Diagram {
            family,
            sig,
            verts: vec![],
            edges,
        }
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", serialize_diagram(self))
    }
}

/// A finite linear combination of canonical diagrams over `Q(m, u, v)`.
/// This is the result type of every rewrite.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Combination {
    terms: BTreeMap<Diagram, RationalFunc>,
}

impl Combination {
    pub fn zero() -> Self {
        Combination {
            terms: BTreeMap::new(),
        }
    }

    pub fn singleton(d: Diagram, c: RationalFunc) -> Self {
        let mut out = Combination::zero();
        out.add_term(d, c);
        out
    }

    pub fn add_term(&mut self, d: Diagram, c: RationalFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(d) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add_ref(&c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Combination) -> Combination {
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Combination) -> Combination {
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c.neg_ref());
        }
        out
    }

    pub fn scale(&self, c: &RationalFunc) -> Combination {
        if c.is_zero() {
            return Combination::zero();
        }
        Combination {
            terms: self
                .terms
                .iter()
                .map(|(d, k)| (d.clone(), k.mul_ref(c)))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Diagram, &RationalFunc)> {
        self.terms.iter()
    }

    pub fn into_iter_terms(self) -> impl Iterator<Item = (Diagram, RationalFunc)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, d: &Diagram) -> RationalFunc {
        self.terms.get(d).cloned().unwrap_or_else(RationalFunc::zero)
    }
}

/// Build a diagram from explicit wiring, canonicalize it, and evaluate away
/// any loops created during construction. Returns the canonical diagram
/// with its scalar prefactor (sign and loop values).
pub fn make_diagram(
    family: Family,
    sig: Signature,
    verts: Vec<VertexKind>,
    edges: Vec<Edge>,
) -> Result<Combination, DiagramError> {
    let d = Diagram {
        family,
        sig,
        verts,
        edges,
    };
    d.validate()?;
    Ok(simplify_raw(d, RationalFunc::one(), &mut RewriteStats::default()))
}
