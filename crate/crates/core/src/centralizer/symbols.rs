//! Named generator diagrams for each family: identities, crossings,
//! trace pairings, and the cubic/quartic invariant symbols.

use crate::diagram::{
    Combination, Diagram, Edge, End, Family, Signature, VertexKind,
};
use crate::ratfunc::RationalFunc;

fn diag(family: Family, sig: Signature, verts: Vec<VertexKind>, edges: Vec<Edge>) -> Diagram {
    let d = Diagram {
        family,
        sig,
        verts,
        edges,
    };
    d.validate().expect("symbol constructor produced an invalid diagram");
    d
}

fn e(a: End, b: End, j: bool) -> Edge {
    Edge { a, b, j }
}

/// Identity on p strands.
pub fn identity(family: Family, p: usize) -> Diagram {
    Diagram::identity(family, Signature::all_v(p))
}

/// Transposition of strands i and i+1 on p strands.
pub fn crossing(family: Family, p: usize, i: usize) -> Diagram {
    let mut perm: Vec<usize> = (0..p).collect();
    perm.swap(i, i + 1);
    Diagram::permutation(family, Signature::all_v(p), &perm)
}

/// The trace pairing ("cup-cap") on two strands for the self-dual
/// families, as a canonical diagram. For `so` it squares to `n` times
/// itself; the symplectic version is returned by [`sp_cupcap`] as a signed
/// combination squaring to `-n` times itself.
pub fn so_cupcap() -> Diagram {
    diag(
        Family::So,
        Signature::all_v(2),
        vec![],
        vec![
            e(End::In(0), End::In(1), false),
            e(End::Out(0), End::Out(1), false),
        ],
    )
}

/// The symplectic trace pairing as an algebra element, normalized so that
/// `E ∘ E = -n E` and `E ∘ P = -E` (arrow conventions of the symplectic
/// calculus). Valid for the `sp` and `e7` families.
pub fn sp_cupcap(family: Family) -> Combination {
    assert!(family.symplectic());
    let d = diag(
        family,
        Signature::all_v(2),
        vec![],
        vec![
            e(End::In(0), End::In(1), true),
            e(End::Out(1), End::Out(0), true),
        ],
    );
    crate::diagram::apply_local_rewrites(&d)
}

/// The cubic pair symbol `eBA` of the e6 series on `V⊗V`: a `d̄` on the
/// out-ports joined to a `d` on the in-ports. With the normalization
/// `d̄·d = δ` it is the projector onto `V̄ ⊂ V⊗V`.
pub fn e6_pair() -> Diagram {
    diag(
        Family::E6,
        Signature::all_v(2),
        vec![VertexKind::D3Bar, VertexKind::D3],
        vec![
            e(End::Out(0), End::Vx(0), false),
            e(End::Out(1), End::Vx(0), false),
            e(End::In(0), End::Vx(1), false),
            e(End::In(1), End::Vx(1), false),
            e(End::Vx(0), End::Vx(1), false),
        ],
    )
}

/// Identity on the mixed channel `V ⊗ V̄`.
pub fn e6_mixed_identity() -> Diagram {
    Diagram::identity(Family::E6, Signature::mixed())
}

/// The annihilation/creation pairing on `V ⊗ V̄` (trace `n`).
pub fn e6_mixed_singlet() -> Diagram {
    diag(
        Family::E6,
        Signature::mixed(),
        vec![],
        vec![
            e(End::In(0), End::In(1), false),
            e(End::Out(0), End::Out(1), false),
        ],
    )
}

/// The crossed-channel cubic symbol `eBB` on `V ⊗ V̄`.
pub fn e6_mixed_pair() -> Diagram {
    diag(
        Family::E6,
        Signature::mixed(),
        vec![VertexKind::D3Bar, VertexKind::D3],
        vec![
            e(End::Out(0), End::Vx(0), false),
            e(End::In(1), End::Vx(0), false),
            e(End::In(0), End::Vx(1), false),
            e(End::Out(1), End::Vx(1), false),
            e(End::Vx(0), End::Vx(1), false),
        ],
    )
}

/// The quartic symbol `eeBA` of the e7 series on `V⊗V`: a `d4` with plain
/// legs on the in-ports and arrowed legs on the out-ports, normalized so
/// that the quartic primitiveness relation reads
/// `Q² = 6(m+2) Q + 18(m+3)(1 + P)`.
pub fn e7_quartic() -> Combination {
    let d = diag(
        Family::E7,
        Signature::all_v(2),
        vec![VertexKind::D4],
        vec![
            e(End::In(0), End::Vx(0), false),
            e(End::In(1), End::Vx(0), false),
            e(End::Vx(0), End::Out(0), true),
            e(End::Vx(0), End::Out(1), true),
        ],
    );
    crate::diagram::apply_local_rewrites(&d)
}

/// Convenience: a single canonical diagram as a unit-coefficient combination.
pub fn comb(d: Diagram) -> Combination {
    crate::diagram::apply_local_rewrites(&d)
}

/// Convenience on combinations.
pub fn scaled(d: Diagram, c: RationalFunc) -> Combination {
    comb(d).scale(&c)
}
