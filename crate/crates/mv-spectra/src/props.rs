use std::sync::Arc;

use serde::Serialize;

use mv_core::{is_archimedean, is_quasiarchimedean, FiniteMvAlgebra};

use crate::error::SpectraError;
use crate::spectrum::SpectrumFin;

/// Outcome of one element-quantified equivalence check.
#[derive(Debug, Clone, Serialize)]
pub struct PropReport {
    pub subject: String,
    pub checked: u64,
    pub violations: Vec<String>,
    pub notes: Vec<String>,
}

impl PropReport {
    pub fn new(subject: String) -> Self {
        Self { subject, checked: 0, violations: Vec::new(), notes: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// For every element: quasiarchimedean in `A` ⟺ `â` archimedean in the
/// hat image `Â`.
pub fn check_quasiarch_hat(a: &Arc<FiniteMvAlgebra>) -> Result<PropReport, SpectraError> {
    let spectrum = SpectrumFin::new(a)?;
    let (image, hat) = spectrum.hat_image()?;
    let mut report = PropReport::new(format!("algebra of size {}", a.size()));
    for x in a.elements() {
        report.checked += 1;
        let quasi = is_quasiarchimedean(a, x).is_some();
        let hat_arch = is_archimedean(&image, hat.apply(x)).is_some();
        if quasi != hat_arch {
            report
                .violations
                .push(format!("{x}: quasiarchimedean = {quasi}, hat archimedean = {hat_arch}"));
        }
    }
    Ok(report)
}

/// For every element: quasiarchimedean ⟺ `W^c_a` is Zariski-open.
pub fn check_cozariski_open(a: &Arc<FiniteMvAlgebra>) -> Result<PropReport, SpectraError> {
    let spectrum = SpectrumFin::new(a)?;
    let mut report = PropReport::new(format!("algebra of size {}", a.size()));
    for x in a.elements() {
        report.checked += 1;
        let quasi = is_quasiarchimedean(a, x).is_some();
        let open = spectrum.is_zariski_open(spectrum.wc_set(x));
        if quasi != open {
            report
                .violations
                .push(format!("{x}: quasiarchimedean = {quasi}, cozero set open = {open}"));
        }
    }
    Ok(report)
}

/// The algebra-level equivalence: quasihyperarchimedean (every element
/// quasiarchimedean) ⟺ every `W^c_a` is open. The further equivalent
/// conditions — continuity of the identity onto the maximal spectrum and
/// compactness of the maximal spectrum — degenerate on a finite spectrum
/// (finite spaces are compact and all maps between them with open
/// preimages of the base are continuous); the report records them as
/// trivially true rather than independently tested.
pub fn check_spectrum_compactness(a: &Arc<FiniteMvAlgebra>) -> Result<PropReport, SpectraError> {
    let spectrum = SpectrumFin::new(a)?;
    let mut report = PropReport::new(format!("algebra of size {}", a.size()));
    report.checked = a.size() as u64;
    let quasihyper = a.elements().all(|x| is_quasiarchimedean(a, x).is_some());
    let all_open = a
        .elements()
        .all(|x| spectrum.is_zariski_open(spectrum.wc_set(x)));
    if quasihyper != all_open {
        report.violations.push(format!(
            "quasihyperarchimedean = {quasihyper} but all cozero sets open = {all_open}"
        ));
    }
    report.notes.push(
        "compactness of the maximal spectrum and continuity onto it are trivially true on a \
         finite spectrum; not independently testable at desk scale"
            .into(),
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finite_bank_samples_pass_all_prop_checks() {
        let algebras = [
            Arc::new(FiniteMvAlgebra::chain(5).unwrap()),
            Arc::new(FiniteMvAlgebra::product(
                &FiniteMvAlgebra::chain(1).unwrap(),
                &FiniteMvAlgebra::chain(2).unwrap(),
            )),
            Arc::new(FiniteMvAlgebra::product(
                &FiniteMvAlgebra::chain(3).unwrap(),
                &FiniteMvAlgebra::chain(3).unwrap(),
            )),
        ];
        for a in algebras {
            assert!(check_quasiarch_hat(&a).unwrap().passed());
            assert!(check_cozariski_open(&a).unwrap().passed());
            assert!(check_spectrum_compactness(&a).unwrap().passed());
        }
    }
}
