//! The radical-vs-vanishing-ideal identities. On a finite carrier every
//! operator is computed exhaustively: `Rad(I) = J(V(I))` (the carrier is
//! separating) and `J(V(I)) = √I`. On `[0, 1]` the checks run over the
//! corpus of term functions: membership in `J(V(⟨f⟩))` is decided three
//! independent ways — interval inclusion of zero sets, pointwise
//! evaluation on the components of `V(f)` (the point-kernel route to
//! `Rad`), and the `n`-indexed infinitesimal checks
//! `ng ⊖ ¬g = ng ⊙ g ∈ ⟨f⟩` with the principal membership itself decided
//! by its own dual routes.

use num_traits::Zero;
use serde::Serialize;

use mv_ideals::{enumerate_ideals, Membership, PrincipalIdeal1};
use mv_terms::Pl1;

use crate::error::NullError;
use crate::fnalg::FiniteFunctionAlgebra;

/// One corpus element against one ideal: where it landed under each
/// route. Discrepancies between routes are collected by the caller.
#[derive(Debug, Clone, Serialize)]
pub struct NullEntry {
    pub g: String,
    /// `g` vanishes on `V(I)`: zero-set inclusion route.
    pub in_jv: bool,
    /// Same question by evaluating `g` on the components of `V(I)`.
    pub in_jv_eval: bool,
    /// `ng ⊙ g ∈ I` for all `n ≤ n_max` (the bounded infradical route);
    /// refutations are exact.
    pub in_sqrt_bounded: bool,
    /// Index of the first `n` whose check failed, if any.
    pub first_failing_n: Option<u32>,
    pub n_checked: u32,
}

#[derive(Debug, Clone, Serialize)]
pub struct NullReport {
    pub subject: String,
    pub entries: Vec<NullEntry>,
    pub discrepancies: Vec<String>,
    pub notes: Vec<String>,
}

impl NullReport {
    pub fn passed(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

/// Evaluation route for "g vanishes on V(f)": `g` is piecewise linear and
/// nonnegative, so it vanishes on a closed interval iff it vanishes at
/// the endpoints and at each of its own breakpoints inside.
fn vanishes_on_locus_by_eval(g: &Pl1, locus: &mv_terms::ClosedSet1) -> Result<bool, NullError> {
    for (a, b) in locus.components() {
        if !g.eval(a)?.is_zero() || !g.eval(b)?.is_zero() {
            return Ok(false);
        }
        for (x, y) in g.breakpoints() {
            if a < x && x < b && !y.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `J(V(⟨f⟩)) = √⟨f⟩` over the corpus, all routes compared pairwise.
pub fn nullstellensatz_f1(
    f_name: &str,
    f: &Pl1,
    corpus: &[(String, Pl1)],
    n_max: u32,
) -> Result<NullReport, NullError> {
    let ideal = PrincipalIdeal1::new(f.clone());
    let locus = ideal.zero_locus();
    let mut entries = Vec::new();
    let mut discrepancies = Vec::new();
    for (g_name, g) in corpus {
        let in_jv = locus.is_subset(&g.zero_set());
        let in_jv_eval = vanishes_on_locus_by_eval(g, &locus)?;
        let mut first_failing_n = None;
        for n in 0..=n_max {
            let diff = g.nmul(n).odot(g); // ng ⊖ ¬g = ng ⊙ g
            match ideal.member(&diff, n_max)? {
                Membership::Yes { .. } => {}
                Membership::No => {
                    first_failing_n = Some(n);
                    break;
                }
                Membership::UnknownUpTo(bound) => {
                    discrepancies.push(format!(
                        "{g_name} in sqrt<{f_name}>: membership undecided at n = {n} (bound {bound})"
                    ));
                    first_failing_n = Some(n);
                    break;
                }
            }
        }
        let in_sqrt_bounded = first_failing_n.is_none();
        if in_jv != in_jv_eval {
            discrepancies.push(format!(
                "{g_name} against <{f_name}>: zero-set route {in_jv}, evaluation route {in_jv_eval}"
            ));
        }
        if in_jv != in_sqrt_bounded {
            discrepancies.push(format!(
                "{g_name} against <{f_name}>: J(V) = {in_jv} but bounded infradical = {in_sqrt_bounded}"
            ));
        }
        entries.push(NullEntry {
            g: g_name.clone(),
            in_jv,
            in_jv_eval,
            in_sqrt_bounded,
            first_failing_n,
            n_checked: n_max,
        });
    }
    Ok(NullReport {
        subject: format!("<{f_name}> in the one-variable algebra"),
        entries,
        discrepancies,
        notes: vec![format!("V(<{f_name}>) = {locus}")],
    })
}

/// `Rad(⟨f⟩) = J(V(⟨f⟩))` on `[0, 1]`: the maximal ideals of the
/// function algebra are the vanishing ideals of single points, so
/// membership in `Rad(⟨f⟩)` is vanishing at every point of `V(f)` —
/// computed by evaluation and compared with the zero-set route.
pub fn rad_eq_jv_f1(
    f_name: &str,
    f: &Pl1,
    corpus: &[(String, Pl1)],
) -> Result<NullReport, NullError> {
    let locus = f.zero_set();
    let mut entries = Vec::new();
    let mut discrepancies = Vec::new();
    for (g_name, g) in corpus {
        let in_jv = locus.is_subset(&g.zero_set());
        let in_rad = vanishes_on_locus_by_eval(g, &locus)?;
        if in_jv != in_rad {
            discrepancies.push(format!("{g_name}: J(V) = {in_jv}, point-kernel route = {in_rad}"));
        }
        entries.push(NullEntry {
            g: g_name.clone(),
            in_jv,
            in_jv_eval: in_rad,
            in_sqrt_bounded: in_jv,
            first_failing_n: None,
            n_checked: 0,
        });
    }
    Ok(NullReport {
        subject: format!("Rad(<{f_name}>) = J(V(<{f_name}>))"),
        entries,
        discrepancies,
        notes: vec!["maximal ideals of the function algebra are point kernels".into()],
    })
}

/// Exhaustive `J(V(I)) = √I = Rad(I)` on a finite separating carrier.
pub fn nullstellensatz_finite(alg: &FiniteFunctionAlgebra) -> Result<NullReport, NullError> {
    let mut discrepancies = Vec::new();
    let mut count = 0u32;
    for i in enumerate_ideals(alg.view(), 128)? {
        count += 1;
        let jv = alg.j_of(alg.v_of(&i));
        let sqrt = i.infradical();
        if jv.bits() != sqrt.bits() {
            discrepancies.push(format!(
                "ideal of size {}: J(V) has {} members, the infradical {}",
                i.card(),
                jv.card(),
                sqrt.card()
            ));
        }
    }
    Ok(NullReport {
        subject: format!("chain({})^{} exhaustive", alg.denom(), alg.points()),
        entries: Vec::new(),
        discrepancies,
        notes: vec![format!("{count} ideals checked")],
    })
}

/// Exhaustive `Rad(I) = J(V(I))` on a finite carrier; requires the
/// carrier to be separating, which is verified first.
pub fn rad_eq_jv_finite(alg: &FiniteFunctionAlgebra) -> Result<NullReport, NullError> {
    let (separating, witness) = crate::restrict::separating_check_finite(alg);
    if !separating {
        return Err(NullError::NotSeparating(witness.unwrap_or_default()));
    }
    let mut discrepancies = Vec::new();
    let mut count = 0u32;
    for i in enumerate_ideals(alg.view(), 128)? {
        count += 1;
        let jv = alg.j_of(alg.v_of(&i));
        let rad = i.rad()?;
        if jv.bits() != rad.bits() {
            discrepancies.push(format!("ideal of size {} breaks Rad = J∘V", i.card()));
        }
    }
    Ok(NullReport {
        subject: format!("chain({})^{} exhaustive", alg.denom(), alg.points()),
        entries: Vec::new(),
        discrepancies,
        notes: vec![format!("{count} ideals checked; carrier separating")],
    })
}

/// Both halves of the pre-Nullstellensatz inclusion on an arbitrary (not
/// necessarily separating) subalgebra of functions on a compact carrier:
/// `√I ⊆ J(V(I))` always, and `J(V(I)) ⊆ √I` by compactness — here the
/// carrier is finite, hence compact, and both directions are exhaustive.
pub fn prenull_subalgebra(alg: &FiniteFunctionAlgebra) -> Result<NullReport, NullError> {
    let (separating, _) = crate::restrict::separating_check_finite(alg);
    let mut discrepancies = Vec::new();
    let mut count = 0u32;
    for i in enumerate_ideals(alg.view(), 128)? {
        count += 1;
        let jv = alg.j_of(alg.v_of(&i));
        let sqrt = i.infradical();
        if !sqrt.is_subset(&jv) {
            discrepancies.push(format!("√I escapes J(V(I)) at an ideal of size {}", i.card()));
        }
        if !jv.is_subset(&sqrt) {
            discrepancies.push(format!("J(V(I)) escapes √I at an ideal of size {}", i.card()));
        }
    }
    Ok(NullReport {
        subject: format!(
            "subalgebra of chain({})^{} ({}separating)",
            alg.denom(),
            alg.points(),
            if separating { "" } else { "non-" }
        ),
        entries: Vec::new(),
        discrepancies,
        notes: vec![format!("{count} ideals, both inclusions")],
    })
}
