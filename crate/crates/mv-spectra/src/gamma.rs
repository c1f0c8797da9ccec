use num_rational::BigRational;
use num_traits::Zero;

use mv_core::is_archimedean;
use mv_gamma::{GammaIdeal, LexGammaAlgebra, LexGammaElement};

use crate::error::SpectraError;
use crate::props::PropReport;

type Q = BigRational;

/// The character space of a lex Γ-algebra: a single character
/// `χ(p, q) = p/k`, whose kernel is `Rad`. The spectrum is one point, so
/// every subset is Zariski-open (`W_1` is the whole space).
#[derive(Debug, Clone, Copy)]
pub struct GammaSpectrum {
    g: LexGammaAlgebra,
}

impl GammaSpectrum {
    pub fn new(g: LexGammaAlgebra) -> Self {
        Self { g }
    }

    pub fn character_value(&self, x: LexGammaElement) -> Result<Q, SpectraError> {
        self.g.check_element(x)?;
        Ok(Q::new(x.p.into(), self.g.k().into()))
    }

    /// `W^c_a` on the one-point spectrum: the whole space when
    /// `χ(a) = 0`, empty otherwise. Both are open.
    pub fn wc_is_whole(&self, x: LexGammaElement) -> Result<bool, SpectraError> {
        Ok(self.character_value(x)?.is_zero())
    }

    /// The kernel of the unique character is exactly `Rad`, checked on a
    /// window.
    pub fn kernel_is_rad_on_window(&self, q_bound: i64) -> Result<bool, SpectraError> {
        for x in self.g.window_elements(q_bound) {
            let in_kernel = self.character_value(x)?.is_zero();
            if in_kernel != GammaIdeal::Rad.contains(x) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The character is a morphism: checked exhaustively on a window.
    pub fn morphism_on_window(&self, q_bound: i64) -> Result<bool, SpectraError> {
        let g = &self.g;
        let one = Q::from_integer(1.into());
        let win = g.window_elements(q_bound);
        for &x in &win {
            let vx = self.character_value(x)?;
            if self.character_value(g.neg(x)?)? != &one - &vx {
                return Ok(false);
            }
            for &y in &win {
                let vy = self.character_value(y)?;
                let s = &vx + &vy;
                let s = if s > one { one.clone() } else { s };
                if self.character_value(g.oplus(x, y)?)? != s {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Quasiarchimedean ⟺ the hat image is archimedean, on a window.
    /// The hat image algebra is the chain `Ł_k` (the quotient by `Rad`),
    /// where `x̂` is the class `p`.
    pub fn check_quasiarch_hat_window(&self, q_bound: i64) -> Result<PropReport, SpectraError> {
        let image = self.g.quotient_by_rad();
        let mut report = PropReport::new(format!("lex_gamma(k={})", self.g.k()));
        for x in self.g.window_elements(q_bound) {
            report.checked += 1;
            let quasi = self.g.classify(x)?.quasiarchimedean;
            let hat_arch = is_archimedean(&image, self.g.project_mod_rad(x)?).is_some();
            if quasi != hat_arch {
                report.violations.push(format!(
                    "{x}: quasiarchimedean = {quasi}, hat archimedean = {hat_arch}"
                ));
            }
        }
        Ok(report)
    }

    /// Quasiarchimedean ⟺ `W^c_a` open, on a window. On the one-point
    /// spectrum every subset is open, and indeed every element is
    /// quasiarchimedean.
    pub fn check_cozariski_window(&self, q_bound: i64) -> Result<PropReport, SpectraError> {
        let mut report = PropReport::new(format!("lex_gamma(k={})", self.g.k()));
        for x in self.g.window_elements(q_bound) {
            report.checked += 1;
            let quasi = self.g.classify(x)?.quasiarchimedean;
            let open = true; // both ∅ and the whole one-point space are open
            if quasi != open {
                report.violations.push(format!("{x}: quasiarchimedean = {quasi}, wc open = {open}"));
            }
        }
        report
            .notes
            .push("one-point spectrum: every subset is open".into());
        Ok(report)
    }
}
