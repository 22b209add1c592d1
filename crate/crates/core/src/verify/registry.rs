/// A documented property of one module and the suite that checks it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Invariant {
    pub module: &'static str,
    pub claim: &'static str,
    pub suite: &'static str,
}

const fn inv(module: &'static str, claim: &'static str, suite: &'static str) -> Invariant {
    Invariant { module, claim, suite }
}

static INVARIANTS: &[Invariant] = &[
    inv("complex", "quadratic roots satisfy Vieta's relations", "quadratic-vieta"),
    inv("complex", "sqrt_slit squares back to its argument", "sqrt-slit"),
    inv("complex", "sqrt_slit lands in the right half-plane", "sqrt-slit"),
    inv("disc", "automorphisms preserve the Mobius distance", "mobius-invariance"),
    inv("disc", "compose satisfies the group axioms", "disc-group"),
    inv("disc", "apply preserves the open disc", "mobius-invariance"),
    inv("symmetrized", "nine membership conditions for G agree", "membership-9way-G"),
    inv("symmetrized", "leaf index is invariant under H_phi", "q-invariance"),
    inv("symmetrized", "sym and sym_inverse are mutually inverse", "sym-roundtrip"),
    inv("symmetrized", "exactly two automorphisms join two leaf points", "recover-automorphism"),
    inv("symmetrized", "H_phi preserves the royal variety", "q-invariance"),
    inv("symmetrized", "H at the reindexed point sends (a, 0) to (0, -b^2)", "reindex-ab"),
    inv("isaev", "D_1 lies in the half-space H and contains (z1, 0)", "membership-9way-D1"),
    inv("isaev", "nine membership conditions for D_1 agree", "membership-9way-D1"),
    inv("isaev", "SO(2,1) preserves D_1 and eta_index", "so21-invariance"),
    inv("isaev", "D_s are nested and D_1 is the union of the D_c", "exhaustion-Gc"),
    inv("isaev", "1 - u^2 - v^2 avoids the cut on Omega_1", "slit-plane"),
    inv("maps", "F and F_inv are mutually inverse between G and D_1", "roundtrip-F"),
    inv("maps", "H_inv inverts H as ordered pairs", "roundtrip-H"),
    inv("maps", "F transports membership in both directions", "roundtrip-F"),
    inv("maps", "the Omega_1 square commutes", "diagram-omega1"),
    inv("maps", "the D_1^(2) square commutes", "diagram-d21"),
    inv("maps", "sym_omega1 has preimages (u, v) and (-u, v)", "roundtrip-H"),
    inv("levi", "Levi form equals 2 a^2 |u| on the leaf", "levi-closed-form"),
    inv("levi", "Levi form is positive on every leaf", "levi-positivity"),
    inv("levi", "Levi form agrees at both sym-preimages", "levi-positivity"),
    inv("levi", "gradient and Levi matrix match finite differences", "levi-fd"),
    inv("levi", "Jacobian determinant of sym is |z1 - z2|^2", "jacobian-det"),
];

/// Every mathematical invariant and its owning suite.
pub fn invariant_registry() -> &'static [Invariant] {
    INVARIANTS
}
