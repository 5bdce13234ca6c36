use super::certificate::{check_hypotheses, tangency_certificate, TangencyCertificate, TERMS};
use super::decomposition::{double_line_division, WaringDecomposition};
use crate::error::{Error, Result};
use crate::forms::{conic_rank, line_tangent_to_conic, HomogeneousForm, Tangency};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalysisReport<T: Scalar> {
    pub num_terms: usize,
    pub pure: bool,
    pub line: HomogeneousForm<T>,
    pub value: HomogeneousForm<T>,
    pub divisible: bool,
    /// The remainder of the division by `x^2` when it is nonzero.
    pub remainder: Option<HomogeneousForm<T>>,
    pub q: Option<HomogeneousForm<T>>,
    pub conic_rank: Option<usize>,
    pub tangency: Option<Tangency<T>>,
    pub certificate: Option<TangencyCertificate<T>>,
    /// Why no certificate was built, when the value is divisible.
    pub certificate_skipped: Option<String>,
}

impl<T: Scalar> AnalysisReport<T> {
    pub fn tangent(&self) -> Option<bool> {
        self.tangency.as_ref().map(|t| t.tangent)
    }

    /// Cross-checks the independently computed fields.
    pub fn check_consistency(&self) -> Result<()> {
        let fail = |m: &str| Err(Error::TheoremViolation(format!("inconsistent report: {m}")));
        if self.divisible != self.remainder.is_none() || self.divisible != self.q.is_some() {
            return fail("divisibility flags");
        }
        if let Some(cert) = &self.certificate {
            let Some(t) = &self.tangency else { return fail("certificate without tangency") };
            if !t.tangent {
                return fail("certificate for a non-tangent line");
            }
            if cert.q_restricted != t.restriction {
                return fail("certificate Q differs from the restriction of q");
            }
            if t.point.as_ref().is_some_and(|p| *p != cert.tangency_point) {
                return fail("tangency points differ");
            }
        }
        if let Some(q) = &self.q {
            if q.is_zero() != self.tangency.is_none() {
                return fail("tangency computed for the zero conic");
            }
        }
        if let Some(t) = &self.tangency {
            let expect_point = t.tangent && !t.restriction.is_zero();
            if expect_point != t.point.is_some() {
                return fail("tangency point");
            }
        }
        Ok(())
    }
}

/// Runs the full pipeline on a decomposition and a line.
pub fn analyze<T: Scalar>(dec: &WaringDecomposition<T>, x: &HomogeneousForm<T>) -> Result<AnalysisReport<T>> {
    let value = dec.value();
    let (q, rem) = double_line_division(&value, x)?;
    let mut report = AnalysisReport {
        num_terms: dec.len(),
        pure: dec.is_pure(),
        line: x.clone(),
        value,
        divisible: rem.is_zero(),
        remainder: None,
        q: None,
        conic_rank: None,
        tangency: None,
        certificate: None,
        certificate_skipped: None,
    };
    if !report.divisible {
        report.remainder = Some(rem);
        return Ok(report);
    }
    report.conic_rank = Some(conic_rank(&q)?);
    if !q.is_zero() {
        report.tangency = Some(line_tangent_to_conic(x, &q)?);
    }
    report.q = Some(q);

    if dec.len() != TERMS {
        report.certificate_skipped = Some(format!("{} terms, certificates need {TERMS}", dec.len()));
    } else {
        match check_hypotheses(dec, x) {
            Ok(_) => report.certificate = Some(tangency_certificate(dec, x)?),
            Err(Error::Precondition(reason)) => report.certificate_skipped = Some(reason),
            Err(e) => return Err(e),
        }
    }
    report.check_consistency()?;
    Ok(report)
}
