//! Pointwise certification of the factorization
//! `det K_d(f) = √Δ_d^sat · Π_μ p_μ` (up to a scalar).

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::enumerative::{discriminant_budget, partitions};
use crate::error::{Error, Result};
use crate::kalman::{delta_at, delta_d_at, KalmanInstance};
use crate::poly::Polynomial;
use crate::polymatrix::QMatrix;
use crate::veronese::Partition;
use crate::witness::{
    check_eigenpairs, generic_non_member, mu_witness, polarization_at, special_locus_matrix, Sampler, SpecialLocus,
    Strategy,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// A witness could not be built; reported, not counted as a failure.
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditEntry {
    pub assertion: String,
    pub status: Status,
    pub witness_seed: u64,
    pub certificate: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditReport {
    pub n: usize,
    pub d: u32,
    pub trials: u64,
    pub entries: Vec<AuditEntry>,
}

impl AuditReport {
    /// No entry failed. Skipped entries do not count against the report.
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.status != Status::Fail)
    }
}

/// Sampler streams are `tag · 2^32 + trial`, one tag per assertion family.
fn stream(tag: u64, trial: u64) -> u64 {
    (tag << 32) | trial
}

const TAG_LINE: u64 = 1;
const TAG_COLLISION: u64 = 2;
const TAG_GENERIC: u64 = 3;
const TAG_MU: u64 = 16;

/// Runs the four checks: degree budget, vanishing at μ-witnesses,
/// vanishing on the `Δ_d^sat` locus, non-vanishing at generic non-members.
pub fn factorization_audit(f: &Polynomial, strategy: &Strategy, trials: u64, seed: u64) -> Result<AuditReport> {
    let inst = KalmanInstance::hypersurface(f)?;
    let (n, d) = (inst.n(), inst.d());
    if n < 2 {
        return Err(Error::OutOfRange(String::from("need at least two variables")));
    }
    let mut entries = Vec::new();
    entries.push(degree_budget(&inst, seed)?);
    for (idx, mu) in partitions(d, n).iter().enumerate() {
        entries.push(mu_vanishing(&inst, f, mu, strategy, trials, seed, TAG_MU + idx as u64));
    }
    if d >= 2 {
        entries.push(collision_vanishing(&inst, trials, seed));
    }
    entries.push(generic_non_vanishing(&inst, f, trials, seed));
    Ok(AuditReport { n, d, trials, entries })
}

fn degree_budget(inst: &KalmanInstance, seed: u64) -> Result<AuditEntry> {
    let budget = discriminant_budget(inst.n() as u64, inst.d())?;
    let get = |k: &str| budget.get(k).cloned().unwrap_or_default();
    let expected = get("deg_det");
    let mut parts = Vec::new();
    for mu in partitions(inst.d(), inst.n()) {
        parts.push(format!("{}", crate::enumerative::deg_mu_kalman(inst.n() as u64, inst.d(), &mu)?));
    }
    let mut certificate = format!("{expected} = {} + {}", get("deg_sqrt_delta_sat"), parts.join(" + "));
    // The formula's total degree against the actual one along a random line.
    let mut sampler = Sampler::for_trial(seed, stream(TAG_LINE, 0));
    let a0 = sampler.matrix(inst.n());
    let a1 = sampler.matrix(inst.n());
    let along = inst.det_along_line(&a0, &a1)?;
    let observed = along.total_degree().map(BigInt::from);
    let status = if observed.as_ref() == Some(&expected) { Status::Pass } else { Status::Fail };
    match observed {
        Some(deg) => certificate.push_str(&format!("; degree along a random line = {deg}")),
        None => certificate.push_str("; restriction to a random line vanished"),
    }
    Ok(AuditEntry { assertion: String::from("degree budget"), status, witness_seed: seed, certificate })
}

fn mu_vanishing(
    inst: &KalmanInstance,
    f: &Polynomial,
    mu: &Partition,
    strategy: &Strategy,
    trials: u64,
    seed: u64,
    tag: u64,
) -> AuditEntry {
    let assertion = format!("det vanishes at {mu}-witnesses");
    let mut on_x = 0u64;
    for trial in 0..trials {
        let mut sampler = Sampler::for_trial(seed, stream(tag, trial));
        let w = match mu_witness(f, mu, strategy, &mut sampler) {
            Ok(w) => w,
            Err(e) => {
                return AuditEntry {
                    assertion,
                    status: Status::Skipped,
                    witness_seed: seed,
                    certificate: format!("trial {trial}: no witness ({e})"),
                }
            }
        };
        let checks = (|| -> Result<(bool, bool, bool)> {
            let eig = check_eigenpairs(&w.a, &w.spec)?;
            let pol = polarization_at(f, mu, &w.points)?.is_zero();
            let det = inst.det_at(&w.a)?.is_zero();
            Ok((eig, pol, det))
        })();
        match checks {
            Ok((true, true, true)) => {}
            Ok((eig, pol, det)) => {
                return AuditEntry {
                    assertion,
                    status: Status::Fail,
                    witness_seed: seed,
                    certificate: format!("trial {trial}: eigenpairs {eig}, f_mu = 0 {pol}, det = 0 {det}"),
                }
            }
            Err(e) => {
                return AuditEntry {
                    assertion,
                    status: Status::Fail,
                    witness_seed: seed,
                    certificate: format!("trial {trial}: {e}"),
                }
            }
        }
        if mu.len() > 1 && w.points.iter().any(|p| f.eval(p).map(|v| v.is_zero()).unwrap_or(false)) {
            on_x += 1;
        }
    }
    let mut certificate = format!("{trials}/{trials} witnesses: A v_i = l_i v_i, f_mu(v) = 0, det K = 0");
    if mu.len() > 1 {
        certificate.push_str(&format!("; witnesses with an eigenpoint on V(f): {on_x}"));
    }
    AuditEntry { assertion, status: Status::Pass, witness_seed: seed, certificate }
}

fn collision_vanishing(inst: &KalmanInstance, trials: u64, seed: u64) -> AuditEntry {
    let assertion = String::from("det vanishes where rho_d(A) has a repeated eigenvalue");
    for trial in 0..trials {
        let mut sampler = Sampler::for_trial(seed, stream(TAG_COLLISION, trial));
        let outcome = (|| -> Result<(bool, bool, bool)> {
            let a = special_locus_matrix(SpecialLocus::SymPowerCollision, inst.n(), &mut sampler)?;
            let simple_a = !delta_at(&a)?.is_zero();
            let repeated = delta_d_at(&a, inst.d())?.is_zero();
            Ok((simple_a, repeated, inst.det_at(&a)?.is_zero()))
        })();
        match outcome {
            Ok((true, true, true)) => {}
            Ok((simple_a, repeated, det)) => {
                return AuditEntry {
                    assertion,
                    status: Status::Fail,
                    witness_seed: seed,
                    certificate: format!(
                        "trial {trial}: Delta(A) != 0 {simple_a}, Delta_d(A) = 0 {repeated}, det = 0 {det}"
                    ),
                }
            }
            Err(e) => {
                return AuditEntry {
                    assertion,
                    status: Status::Skipped,
                    witness_seed: seed,
                    certificate: format!("trial {trial}: {e}"),
                }
            }
        }
    }
    AuditEntry {
        assertion,
        status: Status::Pass,
        witness_seed: seed,
        certificate: format!("{trials}/{trials} matrices: Delta(A) != 0, Delta_d(A) = 0, det K = 0"),
    }
}

fn generic_non_vanishing(inst: &KalmanInstance, f: &Polynomial, trials: u64, seed: u64) -> AuditEntry {
    let assertion = String::from("det is nonzero at generic non-members");
    for trial in 0..trials {
        let mut sampler = Sampler::for_trial(seed, stream(TAG_GENERIC, trial));
        let outcome = generic_non_member(f, &mut sampler).and_then(|a: QMatrix| inst.det_at(&a));
        match outcome {
            Ok(v) if !v.is_zero() => {}
            Ok(_) => {
                return AuditEntry {
                    assertion,
                    status: Status::Fail,
                    witness_seed: seed,
                    certificate: format!("trial {trial}: det K = 0"),
                }
            }
            Err(e) => {
                return AuditEntry {
                    assertion,
                    status: Status::Skipped,
                    witness_seed: seed,
                    certificate: format!("trial {trial}: {e}"),
                }
            }
        }
    }
    AuditEntry {
        assertion,
        status: Status::Pass,
        witness_seed: seed,
        certificate: format!("{trials}/{trials} matrices: det K != 0"),
    }
}
