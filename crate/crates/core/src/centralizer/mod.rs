//! Centralizer algebras `End_g(V⊗p)` for `p = 2, 3` as finite-dimensional
//! associative algebras: ordered diagram bases, reduction tables derived
//! from the invariant-tensor relations, structure constants, and traces.
//!
//! For the classical families the basis is the full set of flavor-valid
//! matchings (the symmetric-group or Brauer diagrams). For e6 and e7 the
//! candidate diagrams are graded by the number of cubic/quartic vertices
//! and the linear relations among them are computed as the radical of the
//! trace form, which for these semisimple algebras is exactly the kernel
//! of the Gram matrix of pairwise traces. The relation space is then
//! cross-checked against the mechanically generated leg-permutation
//! variants of the primary reduction identities.

mod build;
mod enumerate;
mod relations;
mod serialize;
mod symbols;

pub use build::{algebra, build_algebra, build_mixed_e6};
pub use enumerate::{candidates, enumerate_order, is_locally_irreducible};
pub use relations::{e6_seed_relation, e6_variants, e7_seed_relation, e7_variants};
pub use serialize::algebra_to_json;
pub use symbols::*;

use crate::diagram::{
    close_trace_raw, concatenate_raw, tensor_identity, Combination, Diagram, DiagramError, Family,
    Flavor, RewriteStats, Signature,
};
use crate::ratfunc::RationalFunc;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("unsupported signature for series {0}")]
    UnsupportedSignature(String),
    #[error("diagram not reducible to the basis: {0}")]
    NotReducible(String),
    #[error("element belongs to a different algebra")]
    AlgebraMismatch,
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

/// An element of a centralizer algebra: coefficients over the ordered basis.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct AlgebraElement {
    coeffs: BTreeMap<usize, RationalFunc>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis(i: usize) -> Self {
        Self::term(i, RationalFunc::one())
    }

    pub fn term(i: usize, c: RationalFunc) -> Self {
        let mut out = Self::zero();
        out.add_term(i, c);
        out
    }

    pub fn add_term(&mut self, i: usize, c: RationalFunc) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(i) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add_ref(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&i, c) in &other.coeffs {
            out.add_term(i, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&i, c) in &other.coeffs {
            out.add_term(i, c.neg_ref());
        }
        out
    }

    pub fn scale(&self, c: &RationalFunc) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        AlgebraElement {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&i, k)| (i, k.mul_ref(c)))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &RationalFunc)> {
        self.coeffs.iter().map(|(&i, c)| (i, c))
    }

    pub fn coeff(&self, i: usize) -> RationalFunc {
        self.coeffs
            .get(&i)
            .cloned()
            .unwrap_or_else(RationalFunc::zero)
    }

    pub fn support(&self) -> Vec<usize> {
        self.coeffs.keys().cloned().collect()
    }
}

/// A built centralizer algebra.
pub struct CentralizerAlgebra {
    pub series: Family,
    pub sig: Signature,
    /// ordered basis diagrams
    pub basis: Vec<Diagram>,
    /// vertex order (grade) of each basis diagram
    pub grades: Vec<usize>,
    index: BTreeMap<Diagram, usize>,
    /// expansion of off-basis canonical diagrams over the basis
    table: std::sync::RwLock<BTreeMap<Diagram, AlgebraElement>>,
    /// flattened candidate list (coordinates of `relations`)
    pub candidates: Vec<Diagram>,
    /// kernel of the trace Gram matrix over the candidates
    pub relations: Vec<Vec<RationalFunc>>,
    /// mechanically generated variants of the primary reduction identity
    pub variant_count: usize,
    pub variant_rank: usize,
    /// structure constants: entry [i][j] expands basis_i ∘ basis_j
    pub struct_consts: Vec<Vec<AlgebraElement>>,
    /// traces of the basis diagrams
    pub traces: Vec<RationalFunc>,
    /// rewrite-rule usage collected while building (proof transcript data)
    pub build_stats: RewriteStats,
}

impl CentralizerAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn strands(&self) -> usize {
        self.sig.strands()
    }

    pub fn basis_index(&self, d: &Diagram) -> Option<usize> {
        self.index.get(d).copied()
    }

    pub(crate) fn make_index(basis: &[Diagram]) -> BTreeMap<Diagram, usize> {
        basis
            .iter()
            .enumerate()
            .map(|(i, d)| (d.clone(), i))
            .collect()
    }

    /// The identity element (the identity diagram is always in the basis).
    pub fn one(&self) -> AlgebraElement {
        let id = Diagram::identity(self.series, self.sig.clone());
        let i = self
            .basis_index(&id)
            .expect("identity diagram must be in the basis");
        AlgebraElement::basis(i)
    }

    /// Express a combination of canonical diagrams over the basis.
    pub fn reduce(&self, comb: &Combination) -> Result<AlgebraElement, AlgebraError> {
        let mut out = AlgebraElement::zero();
        for (d, c) in comb.iter() {
            if d.sig != self.sig || d.family != self.series {
                return Err(AlgebraError::AlgebraMismatch);
            }
            if let Some(i) = self.basis_index(d) {
                out.add_term(i, c.clone());
                continue;
            }
            let hit = self.table.read().unwrap().get(d).cloned();
            match hit {
                Some(exp) => {
                    for (i, k) in exp.iter() {
                        out.add_term(i, k.mul_ref(c));
                    }
                }
                None => {
                    return Err(AlgebraError::NotReducible(format!(
                        "{} (order {})",
                        d,
                        d.order()
                    )));
                }
            }
        }
        Ok(out)
    }

    pub(crate) fn insert_table(&self, d: Diagram, e: AlgebraElement) {
        self.table.write().unwrap().insert(d, e);
    }

    pub fn table_snapshot(&self) -> BTreeMap<Diagram, AlgebraElement> {
        self.table.read().unwrap().clone()
    }

    /// Multiply two elements through the structure constants.
    pub fn multiply(
        &self,
        a: &AlgebraElement,
        b: &AlgebraElement,
    ) -> Result<AlgebraElement, AlgebraError> {
        let mut out = AlgebraElement::zero();
        for (i, ca) in a.iter() {
            if i >= self.dim() {
                return Err(AlgebraError::AlgebraMismatch);
            }
            for (j, cb) in b.iter() {
                if j >= self.dim() {
                    return Err(AlgebraError::AlgebraMismatch);
                }
                let c = ca.mul_ref(cb);
                for (k, s) in self.struct_consts[i][j].iter() {
                    out.add_term(k, s.mul_ref(&c));
                }
            }
        }
        Ok(out)
    }

    /// Trace: linear extension of the diagram closure over the basis.
    pub fn trace(&self, a: &AlgebraElement) -> RationalFunc {
        let mut out = RationalFunc::zero();
        for (i, c) in a.iter() {
            out = out.add_ref(&self.traces[i].mul_ref(c));
        }
        out
    }

    /// Multiply a combination of diagrams into the algebra: concatenate
    /// diagramwise, then reduce.
    pub fn multiply_combinations(
        &self,
        a: &Combination,
        b: &Combination,
    ) -> Result<AlgebraElement, AlgebraError> {
        let mut stats = RewriteStats::default();
        let mut out = AlgebraElement::zero();
        for (da, ca) in a.iter() {
            for (db, cb) in b.iter() {
                let prod = concatenate_raw(da, db, &mut stats)?;
                let red = self.reduce(&prod)?;
                out = out.add(&red.scale(&ca.mul_ref(cb)));
            }
        }
        Ok(out)
    }

    /// Expand an element back into a combination of basis diagrams.
    pub fn to_combination(&self, a: &AlgebraElement) -> Combination {
        let mut out = Combination::zero();
        for (i, c) in a.iter() {
            out.add_term(self.basis[i].clone(), c.clone());
        }
        out
    }

    /// Embed a two-strand element into this three-strand algebra at the
    /// given slot (`12` extends with a trailing identity strand, `23` with
    /// a leading one).
    pub fn embed(
        &self,
        two: &CentralizerAlgebra,
        a: &AlgebraElement,
        slot: EmbedSlot,
    ) -> Result<AlgebraElement, AlgebraError> {
        if self.strands() != 3 || two.strands() != 2 || two.series != self.series {
            return Err(AlgebraError::UnsupportedSignature(format!(
                "embed needs a 2-strand element of the same series in a 3-strand algebra ({})",
                self.series.name()
            )));
        }
        let mut out = AlgebraElement::zero();
        let mut stats = RewriteStats::default();
        for (i, c) in a.iter() {
            let d = &two.basis[i];
            let ext = tensor_identity(d, Flavor::V, slot == EmbedSlot::S23);
            let simplified = crate::diagram::simplify_raw(ext, RationalFunc::one(), &mut stats);
            let red = self.reduce(&simplified)?;
            out = out.add(&red.scale(c));
        }
        Ok(out)
    }

    /// Trace of a single diagram, recomputed by closure (used in tests).
    pub fn diagram_trace(&self, d: &Diagram) -> Result<RationalFunc, DiagramError> {
        close_trace_raw(d, &mut RewriteStats::default())
    }
}

/// Embedding slot for two-strand elements into three strands.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EmbedSlot {
    S12,
    S23,
}

/// Series parameterization (how the loop value depends on the parameter).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Parameterization {
    FreeN,
    ThreeMPlusThree,
    SixMPlusEight,
}

pub fn parameterization(f: Family) -> Parameterization {
    match f {
        Family::Su | Family::So | Family::Sp => Parameterization::FreeN,
        Family::E6 => Parameterization::ThreeMPlusThree,
        Family::E7 => Parameterization::SixMPlusEight,
    }
}
