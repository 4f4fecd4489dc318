//! Shared report types: axiom verification results and expected-vs-computed
//! theorem checks. Verification failures are data, not errors, so callers can
//! render full reports and drive exit codes.

use std::fmt;

/// One axiom (or identity) check with an optional failure witness.
#[derive(Debug, Clone)]
pub struct AxiomCheck {
    pub axiom: String,
    pub passed: bool,
    pub witness: Option<String>,
}

impl AxiomCheck {
    pub fn pass(axiom: impl Into<String>) -> AxiomCheck {
        AxiomCheck {
            axiom: axiom.into(),
            passed: true,
            witness: None,
        }
    }

    pub fn fail(axiom: impl Into<String>, witness: impl Into<String>) -> AxiomCheck {
        AxiomCheck {
            axiom: axiom.into(),
            passed: false,
            witness: Some(witness.into()),
        }
    }
}

/// Outcome of a batch of axiom checks over one algebra.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub p: u32,
    pub seed: u64,
    pub samples: u32,
    pub checks: Vec<AxiomCheck>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "verification p={} seed={} samples={}",
            self.p, self.seed, self.samples
        )?;
        for c in &self.checks {
            match (&c.passed, &c.witness) {
                (true, _) => writeln!(f, "  PASS {}", c.axiom)?,
                (false, Some(w)) => writeln!(f, "  FAIL {} [{}]", c.axiom, w)?,
                (false, None) => writeln!(f, "  FAIL {}", c.axiom)?,
            }
        }
        Ok(())
    }
}

/// Expected-vs-computed comparison for one closed-form prediction. The
/// computation never trusts the prediction; mismatches are reported, not
/// raised.
#[derive(Debug, Clone)]
pub struct TheoremCheck {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub matches: bool,
}

impl TheoremCheck {
    pub fn compare<E: fmt::Display, C: fmt::Display>(
        name: impl Into<String>,
        expected: E,
        computed: C,
    ) -> TheoremCheck {
        let expected = expected.to_string();
        let computed = computed.to_string();
        let matches = expected == computed;
        TheoremCheck {
            name: name.into(),
            expected,
            computed,
            matches,
        }
    }
}
