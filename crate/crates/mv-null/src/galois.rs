//! The order-reversing V–J correspondence and its lattice laws:
//! monotonicity, the unit inclusions `I ⊆ J(V(I))` and `S ⊆ V(J(S))`,
//! closure `S = V(J(S))`, nonemptiness of `V` on proper ideals, the
//! infimum laws `V(I ∨ I') = V(I) ∩ V(I')` and `J(S ∪ S') = J(S) ∩ J(S')`,
//! and the supremum-side inclusions.

use serde::Serialize;

use mv_ideals::{enumerate_ideals, IdealFin, PrincipalIdeal1};
use mv_terms::{ClosedSet1, Pl1};

use crate::error::NullError;
use crate::fnalg::FiniteFunctionAlgebra;
use crate::vj::generator_for_closed_set;

/// One law, one verdict; `counterexample` names the offending instance.
#[derive(Debug, Clone, Serialize)]
pub struct LawResult {
    pub law: String,
    pub holds: bool,
    pub instances: u64,
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GaloisReport {
    pub subject: String,
    pub laws: Vec<LawResult>,
}

impl GaloisReport {
    pub fn passed(&self) -> bool {
        self.laws.iter().all(|l| l.holds)
    }
}

struct LawCollector {
    laws: Vec<LawResult>,
}

impl LawCollector {
    fn new() -> Self {
        Self { laws: Vec::new() }
    }

    fn record(&mut self, law: &str, instances: u64, counterexample: Option<String>) {
        self.laws.push(LawResult {
            law: law.to_string(),
            holds: counterexample.is_none(),
            instances,
            counterexample,
        });
    }
}

/// Exhaustive verification on a finite carrier: all ideals of the view,
/// all `2^|X|` (closed) point sets.
pub fn galois_suite_finite(alg: &FiniteFunctionAlgebra) -> Result<GaloisReport, NullError> {
    let ideals = enumerate_ideals(alg.view(), 128)?;
    let sets: Vec<u32> = alg.all_point_sets().collect();
    let mut c = LawCollector::new();

    // order reversal
    let mut bad = None;
    let mut n = 0;
    for i in &ideals {
        for j in &ideals {
            if i.is_subset(j) {
                n += 1;
                let (vi, vj) = (alg.v_of(i), alg.v_of(j));
                if vj & !vi != 0 {
                    bad = Some(format!("ideals with {} ⊆ {}", i.card(), j.card()));
                }
            }
        }
    }
    c.record("V reverses inclusions", n, bad);

    let mut bad = None;
    let mut n = 0;
    for &s in &sets {
        for &t in &sets {
            if s & !t == 0 {
                n += 1;
                if !alg.j_of(t).is_subset(&alg.j_of(s)) {
                    bad = Some(format!("sets {s:b} ⊆ {t:b}"));
                }
            }
        }
    }
    c.record("J reverses inclusions", n, bad);

    // unit inclusions and closure
    let mut bad = None;
    for i in &ideals {
        if !i.is_subset(&alg.j_of(alg.v_of(i))) {
            bad = Some(format!("ideal of size {}", i.card()));
        }
    }
    c.record("I is contained in J(V(I))", ideals.len() as u64, bad);

    let mut bad = None;
    for &s in &sets {
        let back = alg.v_of(&alg.j_of(s));
        if back != s {
            bad = Some(format!("set {s:b} came back as {back:b}"));
        }
    }
    c.record("S = V(J(S)) for every closed set", sets.len() as u64, bad);

    // properness
    let mut bad = None;
    let mut n = 0;
    for i in &ideals {
        if i.is_proper() {
            n += 1;
            if alg.v_of(i) == 0 {
                bad = Some(format!("proper ideal of size {}", i.card()));
            }
        }
    }
    c.record("V of a proper ideal is nonempty", n, bad);

    // infimum laws on pairs
    let mut bad = None;
    let mut n = 0;
    for i in &ideals {
        for j in &ideals {
            n += 1;
            if alg.v_of(&i.join(j)?) != alg.v_of(i) & alg.v_of(j) {
                bad = Some("V of a join".into());
            }
        }
    }
    c.record("V(I ∨ I') = V(I) ∩ V(I')", n, bad);

    let mut bad = None;
    let mut n = 0;
    for &s in &sets {
        for &t in &sets {
            n += 1;
            let lhs = alg.j_of(s | t);
            let rhs = alg.j_of(s).intersect(&alg.j_of(t))?;
            if lhs != rhs {
                bad = Some(format!("sets {s:b}, {t:b}"));
            }
        }
    }
    c.record("J(S ∪ S') = J(S) ∩ J(S')", n, bad);

    // supremum-side inclusions
    let mut bad = None;
    let mut n = 0;
    for i in &ideals {
        for j in &ideals {
            n += 1;
            let lhs = alg.v_of(i) | alg.v_of(j);
            let rhs = alg.v_of(&i.intersect(j)?);
            if lhs & !rhs != 0 {
                bad = Some("V(I) ∪ V(I') escapes V(I ∧ I')".into());
            }
        }
    }
    c.record("V(I) ∪ V(I') is contained in V(I ∧ I')", n, bad);

    let mut bad = None;
    let mut n = 0;
    for &s in &sets {
        for &t in &sets {
            n += 1;
            let lhs = alg.j_of(s).join(&alg.j_of(t))?;
            let rhs = alg.j_of(s & t);
            if !lhs.is_subset(&rhs) {
                bad = Some(format!("sets {s:b}, {t:b}"));
            }
        }
    }
    c.record("J(S) ∨ J(S') is contained in J(S ∩ S')", n, bad);

    Ok(GaloisReport { subject: format!("chain({})^{}", alg.denom(), alg.points()), laws: c.laws })
}

/// The corpus-driven verification on `[0, 1]`: ideals are the principal
/// ideals of the corpus functions, closed sets are their zero loci.
pub fn galois_suite_f1(corpus: &[(String, Pl1)], n_max: u32) -> Result<GaloisReport, NullError> {
    let mut c = LawCollector::new();
    let ideals: Vec<(String, PrincipalIdeal1)> = corpus
        .iter()
        .map(|(name, f)| (name.clone(), PrincipalIdeal1::new(f.clone())))
        .collect();
    let sets: Vec<ClosedSet1> = corpus.iter().map(|(_, f)| f.zero_set()).collect();

    // S = V(J(S)): the constructed generator vanishes exactly on S
    let mut bad = None;
    for s in &sets {
        let g = generator_for_closed_set(s)?;
        if g.zero_set() != *s {
            bad = Some(format!("{s}"));
        }
    }
    c.record("S = V(J(S)) on the corpus zero sets", sets.len() as u64, bad);

    // I ⊆ J(V(I)): members vanish on the zero locus
    let mut bad = None;
    let mut n = 0;
    for (fname, ideal) in &ideals {
        for (gname, g) in corpus {
            if ideal.member(g, n_max)?.holds() {
                n += 1;
                if !ideal.zero_locus().is_subset(&g.zero_set()) {
                    bad = Some(format!("{gname} in <{fname}>"));
                }
            }
        }
    }
    c.record("members of <f> vanish on V(f)", n, bad);

    // monotonicity: f ∈ <f'> means <f> ⊆ <f'>, hence V(f') ⊆ V(f)
    let mut bad = None;
    let mut n = 0;
    for (fname, f_ideal) in &ideals {
        for (gname, g_ideal) in &ideals {
            if g_ideal.member(f_ideal.generator(), n_max)?.holds() {
                n += 1;
                if !g_ideal.zero_locus().is_subset(&f_ideal.zero_locus()) {
                    bad = Some(format!("<{fname}> inside <{gname}>"));
                }
            }
        }
    }
    c.record("V reverses principal-ideal inclusions", n, bad);

    // properness: <f> proper iff V(f) nonempty
    let mut bad = None;
    for (fname, ideal) in &ideals {
        let one_member = ideal.member(&Pl1::one(), n_max)?.holds();
        if one_member == ideal.is_proper() {
            bad = Some(fname.clone());
        }
    }
    c.record("V of a proper principal ideal is nonempty", ideals.len() as u64, bad);

    // V(<f> ∨ <g>) = V(f ⊕ g) = V(f) ∩ V(g)
    let mut bad = None;
    let mut n = 0;
    for (fname, f_ideal) in &ideals {
        for (gname, g_ideal) in &ideals {
            n += 1;
            let join_gen = f_ideal.generator().oplus(g_ideal.generator());
            if join_gen.zero_set() != f_ideal.zero_locus().intersect(&g_ideal.zero_locus()) {
                bad = Some(format!("<{fname}> ∨ <{gname}>"));
            }
        }
    }
    c.record("V(<f> ∨ <g>) = V(f) ∩ V(g)", n, bad);

    // J(S ∪ S') = J(S) ∩ J(S') as membership over the corpus
    let mut bad = None;
    let mut n = 0;
    for s in &sets {
        for t in &sets {
            let union_gen = PrincipalIdeal1::new(generator_for_closed_set(&s.union(t))?);
            let s_gen = PrincipalIdeal1::new(generator_for_closed_set(s)?);
            let t_gen = PrincipalIdeal1::new(generator_for_closed_set(t)?);
            for (hname, h) in corpus {
                n += 1;
                let in_union = union_gen.member(h, n_max)?.holds();
                let in_both = s_gen.member(h, n_max)?.holds() && t_gen.member(h, n_max)?.holds();
                if in_union != in_both {
                    bad = Some(format!("{hname} against {s} and {t}"));
                }
            }
        }
    }
    c.record("J(S ∪ S') = J(S) ∩ J(S') over the corpus", n, bad);

    Ok(GaloisReport { subject: "free one-variable algebra on [0, 1]".into(), laws: c.laws })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::default_corpus;

    #[test]
    fn finite_carriers_pass_exhaustively() {
        for (points, denom) in [(2usize, 1u32), (3, 1), (2, 2), (3, 2)] {
            let alg = FiniteFunctionAlgebra::full(points, denom).unwrap();
            let report = galois_suite_finite(&alg).unwrap();
            assert!(report.passed(), "{points} points, chain({denom}): {:?}", report.laws);
        }
    }

    #[test]
    fn f1_corpus_passes() {
        let corpus: Vec<(String, Pl1)> = default_corpus()
            .into_iter()
            .map(|e| (e.source, e.pl))
            .collect();
        let report = galois_suite_f1(&corpus, 64).unwrap();
        assert!(report.passed(), "{:?}", report.laws);
    }
}
