//! Certified rank claims.
//!
//! A certificate combines one-sided bounds so that the verdict is exact:
//!
//! * a modular rank at any prime is a *lower* bound for the rational rank;
//! * an exactly verified kernel of dimension `k` caps the rank at
//!   `cols - k` from *above*;
//! * `rows` and `cols` cap it trivially.
//!
//! So "modular rank reaches `cols`" proves injectivity outright, "reaches
//! `rows`" proves surjectivity, and "annihilates an independent set of size
//! `cols - r` while the modular rank reaches `r`" pins the kernel exactly.
//! Several primes are used and must agree — a disagreement can only come from
//! an unlucky prime or an implementation fault, and either deserves a failed
//! certificate rather than a shrug.

use num_traits::Zero;

use super::{modular_rank, rank_kernel, BadPrime, Rref, Scalar, SparseMatrix};

/// A claim about the rank of a specific matrix.
#[derive(Clone, Debug)]
pub enum RankClaim {
    /// The rank equals this value exactly.
    Rank(usize),
    /// Full column rank.
    Injective,
    /// Full row rank.
    Surjective,
    /// The kernel is exactly the span of these vectors (each of length
    /// `cols`). An empty list claims a trivial kernel.
    KernelSpan(Vec<Vec<Scalar>>),
}

impl RankClaim {
    fn describe(&self, m: &SparseMatrix) -> String {
        match self {
            RankClaim::Rank(k) => format!("rank = {k}"),
            RankClaim::Injective => format!("injective (rank = cols = {})", m.cols()),
            RankClaim::Surjective => format!("surjective (rank = rows = {})", m.rows()),
            RankClaim::KernelSpan(vs) => format!("kernel = span of {} given vectors", vs.len()),
        }
    }

    fn target_rank(&self, m: &SparseMatrix) -> usize {
        match self {
            RankClaim::Rank(k) => *k,
            RankClaim::Injective => m.cols(),
            RankClaim::Surjective => m.rows(),
            RankClaim::KernelSpan(vs) => m.cols() - vs.len(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertStatus {
    Valid,
    Invalid,
}

/// Outcome of [`certify`]/[`certify_exact`], with enough evidence to audit.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub status: CertStatus,
    pub claim: String,
    /// Rank the claim requires.
    pub target_rank: usize,
    pub primes: Vec<u64>,
    pub modular_ranks: Vec<usize>,
    pub exact_rank: Option<usize>,
    pub notes: Vec<String>,
}

impl Certificate {
    pub fn is_valid(&self) -> bool {
        self.status == CertStatus::Valid
    }
}

/// Exact side conditions for a kernel-span claim: every vector has the right
/// length, is annihilated by `m` over the rationals, and the set is linearly
/// independent. Returns notes for any violation.
fn kernel_span_side_conditions(
    m: &SparseMatrix,
    vs: &[Vec<Scalar>],
    notes: &mut Vec<String>,
) -> bool {
    let mut ok = true;
    if vs.len() > m.cols() {
        notes.push(format!(
            "{} vectors cannot be independent in dimension {}",
            vs.len(),
            m.cols()
        ));
        return false;
    }
    for (i, v) in vs.iter().enumerate() {
        if v.len() != m.cols() {
            notes.push(format!(
                "vector {i} has length {} != cols {}",
                v.len(),
                m.cols()
            ));
            return false;
        }
        if !m.mul_vec(v).iter().all(Scalar::is_zero) {
            notes.push(format!("vector {i} is not annihilated by the matrix"));
            ok = false;
        }
    }
    let as_rows: Vec<Vec<(usize, Scalar)>> = vs
        .iter()
        .map(|v| {
            v.iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(c, x)| (c, x.clone()))
                .collect()
        })
        .collect();
    let indep = Rref::of_rows(as_rows, m.cols()).rank();
    if indep != vs.len() {
        notes.push(format!(
            "given vectors span only {indep} dimensions, not {}",
            vs.len()
        ));
        ok = false;
    }
    ok
}

/// Certify `claim` using exact side conditions plus modular ranks at `primes`.
///
/// For `Rank(k)` claims the exact rank is also computed (a modular rank alone
/// cannot bound the rank from above); for the other claims the stated
/// one-sided bounds make the modular route exact.
pub fn certify(
    m: &SparseMatrix,
    claim: &RankClaim,
    primes: &[u64],
) -> Result<Certificate, BadPrime> {
    assert!(!primes.is_empty(), "at least one prime is required");
    let target = claim.target_rank(m);
    let mut notes = Vec::new();
    let mut side_ok = true;
    let mut exact_rank = None;

    match claim {
        RankClaim::KernelSpan(vs) => {
            side_ok = kernel_span_side_conditions(m, vs, &mut notes);
        }
        RankClaim::Rank(k) => {
            let r = rank_kernel(m).0;
            exact_rank = Some(r);
            if r != *k {
                side_ok = false;
                notes.push(format!("exact elimination gives rank {r}, claim says {k}"));
            }
        }
        RankClaim::Injective | RankClaim::Surjective => {}
    }

    let mut modular_ranks = Vec::with_capacity(primes.len());
    for &p in primes {
        modular_ranks.push(modular_rank(m, p)?);
    }
    let agree = modular_ranks.windows(2).all(|w| w[0] == w[1]);
    if !agree {
        notes.push(format!(
            "modular ranks disagree across primes: {modular_ranks:?}"
        ));
    }
    let reached = match claim {
        // Exact elimination already decided Rank(k); modular runs are a
        // cross-check and must not exceed the exact rank.
        RankClaim::Rank(_) => modular_ranks.iter().all(|&r| r <= exact_rank.unwrap()),
        _ => modular_ranks.iter().all(|&r| r == target),
    };
    if !reached {
        notes.push(format!(
            "modular ranks {modular_ranks:?} do not establish target rank {target}"
        ));
    }

    Ok(Certificate {
        status: if side_ok && agree && reached {
            CertStatus::Valid
        } else {
            CertStatus::Invalid
        },
        claim: claim.describe(m),
        target_rank: target,
        primes: primes.to_vec(),
        modular_ranks,
        exact_rank,
        notes,
    })
}

/// The exact kernel dimension of `m`, obtained cheaply when possible.
///
/// If a modular rank equals the row count, the rational rank is pinned
/// exactly (`rank mod p ≤ rank ≤ rows`), so the kernel dimension is
/// `cols − rows` with no rational elimination. Otherwise falls back to full
/// rational elimination. Deterministic: primes come from a fixed seed.
pub fn certified_kernel_dim(m: &SparseMatrix) -> usize {
    use rand::SeedableRng;
    if m.rows() < m.cols() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
        for p in crate::linalg::admissible_primes(&mut rng, 2, &[m]) {
            if let Ok(r) = crate::linalg::modular_rank(m, p) {
                if r == m.rows() {
                    return m.cols() - m.rows();
                }
            }
        }
    }
    crate::linalg::rank_kernel(m).1.len()
}

/// Certify `claim` by full rational elimination, no primes involved.
pub fn certify_exact(m: &SparseMatrix, claim: &RankClaim) -> Certificate {
    let target = claim.target_rank(m);
    let mut notes = Vec::new();
    let mut side_ok = true;
    if let RankClaim::KernelSpan(vs) = claim {
        side_ok = kernel_span_side_conditions(m, vs, &mut notes);
    }
    let r = rank_kernel(m).0;
    if r != target {
        notes.push(format!("exact rank is {r}, claim requires {target}"));
    }
    Certificate {
        status: if side_ok && r == target {
            CertStatus::Valid
        } else {
            CertStatus::Invalid
        },
        claim: claim.describe(m),
        target_rank: target,
        primes: Vec::new(),
        modular_ranks: Vec::new(),
        exact_rank: Some(r),
        notes,
    }
}
