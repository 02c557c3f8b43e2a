//! Numeric M- and Z-eigenpairs of general tensors and a sphere-grid oracle
//! for the minimum of `f(x, y)`.
//!
//! Candidates come from alternating branch-eigenvector iteration followed by
//! a damped Gauss–Newton polish of the full eigen system, plus direct
//! polishes from random starts. All randomness is drawn from
//! [`SplitMix64`] keyed by `(seed, start index)`, and results are merged in
//! start order, so output is identical for identical inputs.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{dot, solve, symmetric_eigen};
use crate::rng::SplitMix64;
use crate::tensor::{ElasticityTensor, Mat3, Vec3};

type Full = [[[[f64; 3]; 3]; 3]; 3];

pub const DEFAULT_SEED: u64 = 0x5EED_0F_E1A5_71C1;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolverConfig {
    pub max_iter: usize,
    /// Convergence threshold on [`residual`].
    pub tol: f64,
    pub n_starts: usize,
    pub seed: u64,
    /// Oracle points per angle.
    pub grid_n: usize,
    /// Relative θ gap below which two eigenvalues are merged.
    pub dedup_tol: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            max_iter: 500,
            tol: 1e-12,
            n_starts: 200,
            seed: DEFAULT_SEED,
            grid_n: 64,
            dedup_tol: 1e-9,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_iter == 0 {
            return Err(Error::Config("max_iter must be positive"));
        }
        if !(self.tol > 0.0) {
            return Err(Error::Config("tol must be positive"));
        }
        if self.n_starts == 0 {
            return Err(Error::Config("n_starts must be positive"));
        }
        if self.grid_n < 16 {
            return Err(Error::Config("grid_n must be at least 16"));
        }
        if !(self.dedup_tol > 0.0) {
            return Err(Error::Config("dedup_tol must be positive"));
        }
        Ok(())
    }
}

/// Eigenvector rank of the 3×3 matrices `A(y)`, `B(x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    Smallest,
    Middle,
    Largest,
}

impl Branch {
    pub const ALL: [Branch; 3] = [Branch::Smallest, Branch::Middle, Branch::Largest];

    fn index(self) -> usize {
        match self {
            Branch::Smallest => 0,
            Branch::Middle => 1,
            Branch::Largest => 2,
        }
    }

    fn from_index(i: usize) -> Self {
        Branch::ALL[i.min(2)]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MEigenpair {
    pub theta: f64,
    pub x: Vec3,
    pub y: Vec3,
    pub residual: f64,
    pub iterations: usize,
    /// Rank of `θ` among the eigenvalues of `A(y)` at the returned pair.
    pub branch: Branch,
    pub converged: bool,
    /// Number of merged candidates with this `θ`.
    pub multiplicity: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZEigenpair {
    pub eta: f64,
    pub x: Vec3,
    pub residual: f64,
    pub iterations: usize,
    pub branch: Branch,
    pub converged: bool,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MSpectrum {
    pub pairs: Vec<MEigenpair>,
    pub attempts: usize,
    pub converged: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZSpectrum {
    pub pairs: Vec<ZEigenpair>,
    pub attempts: usize,
    pub converged: usize,
}

fn a_mat(c: &Full, y: &Vec3) -> Mat3 {
    let mut a = [[0.0; 3]; 3];
    for i in 0..3 {
        for k in i..3 {
            let mut s = 0.0;
            for j in 0..3 {
                for l in 0..3 {
                    s += c[i][j][k][l] * y[j] * y[l];
                }
            }
            a[i][k] = s;
            a[k][i] = s;
        }
    }
    a
}

fn b_mat(c: &Full, x: &Vec3) -> Mat3 {
    let mut b = [[0.0; 3]; 3];
    for j in 0..3 {
        for l in j..3 {
            let mut s = 0.0;
            for i in 0..3 {
                for k in 0..3 {
                    s += c[i][j][k][l] * x[i] * x[k];
                }
            }
            b[j][l] = s;
            b[l][j] = s;
        }
    }
    b
}

fn mv(m: &Mat3, v: &Vec3) -> Vec3 {
    std::array::from_fn(|i| dot(&m[i], v))
}

fn unit(v: &Vec3) -> Option<Vec3> {
    crate::linalg::normalized(v)
}

fn finite3(v: &Vec3) -> bool {
    v.iter().all(|c| c.is_finite())
}

fn m_residual_full(c: &Full, theta: f64, x: &Vec3, y: &Vec3) -> f64 {
    let ax = mv(&a_mat(c, y), x);
    let by = mv(&b_mat(c, x), y);
    let mut r = 0.0_f64;
    for i in 0..3 {
        r = r.max((ax[i] - theta * x[i]).abs());
        r = r.max((by[i] - theta * y[i]).abs());
    }
    r / theta.abs().max(1.0)
}

fn z_residual_full(c: &Full, eta: f64, x: &Vec3) -> f64 {
    let ax = mv(&a_mat(c, x), x);
    let r = (0..3).fold(0.0_f64, |r, i| r.max((ax[i] - eta * x[i]).abs()));
    r / eta.abs().max(1.0)
}

/// `max(‖A(y)x − θx‖∞, ‖B(x)y − θy‖∞) / max(1, |θ|)`.
pub fn residual(t: &ElasticityTensor, theta: f64, x: &Vec3, y: &Vec3) -> f64 {
    m_residual_full(&t.full(), theta, x, y)
}

/// `‖A(x)x − ηx‖∞ / max(1, |η|)`.
pub fn z_residual(t: &ElasticityTensor, eta: f64, x: &Vec3) -> f64 {
    z_residual_full(&t.full(), eta, x)
}

fn quad(c: &Full, x: &Vec3, y: &Vec3) -> f64 {
    dot(x, &mv(&a_mat(c, y), x))
}

/// Sign of `v` chosen to maximize overlap with `prev`; a zero overlap
/// falls back to first nonzero component positive.
fn align(v: Vec3, prev: &Vec3) -> Vec3 {
    let d = dot(&v, prev);
    let flip = if d != 0.0 {
        d < 0.0
    } else {
        v.iter().find(|c| **c != 0.0).is_some_and(|c| *c < 0.0)
    };
    if flip {
        v.map(|c| -c)
    } else {
        v
    }
}

fn branch_vector(m: &Mat3, branch: Branch, prev: &Vec3) -> Result<Vec3> {
    let e = symmetric_eigen(m).map_err(|_| Error::Numeric("non-finite contraction"))?;
    Ok(align(e.vectors[branch.index()], prev))
}

fn rank_of(m: &Mat3, theta: f64) -> Branch {
    match symmetric_eigen(m) {
        Ok(e) => {
            let k = (0..3)
                .min_by(|&a, &b| {
                    (e.values[a] - theta)
                        .abs()
                        .total_cmp(&(e.values[b] - theta).abs())
                })
                .unwrap_or(0);
            Branch::from_index(k)
        }
        Err(_) => Branch::Smallest,
    }
}

struct Iterate {
    x: Vec3,
    y: Vec3,
    theta: f64,
    residual: f64,
    iterations: usize,
}

fn alternate_full(
    c: &Full,
    x0: &Vec3,
    y0: &Vec3,
    branch: Branch,
    max_iter: usize,
    stop: f64,
) -> Result<Iterate> {
    let mut x = unit(x0).ok_or(Error::Degenerate("zero start vector"))?;
    let mut y = unit(y0).ok_or(Error::Degenerate("zero start vector"))?;
    let mut it = 0;
    let mut theta = quad(c, &x, &y);
    let mut res = m_residual_full(c, theta, &x, &y);
    while it < max_iter && !(res < stop) {
        x = branch_vector(&a_mat(c, &y), branch, &x)?;
        y = branch_vector(&b_mat(c, &x), branch, &y)?;
        theta = quad(c, &x, &y);
        if !theta.is_finite() {
            return Err(Error::Numeric("non-finite iterate"));
        }
        res = m_residual_full(c, theta, &x, &y);
        it += 1;
    }
    Ok(Iterate {
        x,
        y,
        theta,
        residual: res,
        iterations: it,
    })
}

/// Alternating iteration `x ← v_b(A(y))`, `y ← v_b(B(x))` on branch `b`
/// until the residual drops below `cfg.tol` or `cfg.max_iter` sweeps.
pub fn alternate(
    t: &ElasticityTensor,
    x0: &Vec3,
    y0: &Vec3,
    branch: Branch,
    cfg: &SolverConfig,
) -> Result<MEigenpair> {
    let c = t.full();
    let r = alternate_full(&c, x0, y0, branch, cfg.max_iter, cfg.tol)?;
    Ok(MEigenpair {
        theta: r.theta,
        x: r.x,
        y: r.y,
        residual: r.residual,
        iterations: r.iterations,
        branch,
        converged: r.residual < cfg.tol,
        multiplicity: 1,
    })
}

/// Damped Gauss–Newton on `A(y)x = θx`, `B(x)y = θy`, `|x|² = |y|² = 1`
/// (8 equations, 7 unknowns).
fn polish_m(c: &Full, x: Vec3, y: Vec3, theta: f64, max_iter: usize) -> Iterate {
    let eval = |z: &[f64; 7]| -> ([f64; 8], f64) {
        let x = [z[0], z[1], z[2]];
        let y = [z[3], z[4], z[5]];
        let th = z[6];
        let ax = mv(&a_mat(c, &y), &x);
        let by = mv(&b_mat(c, &x), &y);
        let mut f = [0.0; 8];
        for i in 0..3 {
            f[i] = ax[i] - th * x[i];
            f[3 + i] = by[i] - th * y[i];
        }
        f[6] = 0.5 * (dot(&x, &x) - 1.0);
        f[7] = 0.5 * (dot(&y, &y) - 1.0);
        let n = f.iter().map(|v| v * v).sum();
        (f, n)
    };
    let jac = |z: &[f64; 7]| -> [[f64; 7]; 8] {
        let x = [z[0], z[1], z[2]];
        let y = [z[3], z[4], z[5]];
        let th = z[6];
        let a = a_mat(c, &y);
        let b = b_mat(c, &x);
        let mut j = [[0.0; 7]; 8];
        for i in 0..3 {
            for m in 0..3 {
                j[i][m] = a[i][m] - if i == m { th } else { 0.0 };
                j[3 + i][3 + m] = b[i][m] - if i == m { th } else { 0.0 };
                let mut s1 = 0.0;
                let mut s2 = 0.0;
                for p in 0..3 {
                    for q in 0..3 {
                        // ∂(A(y)x)_i/∂y_m and ∂(B(x)y)_i/∂x_m
                        s1 += (c[i][m][p][q] * x[p] * y[q]) + (c[i][p][q][m] * y[p] * x[q]);
                        s2 += (c[m][p][q][i] * y[p] * x[q]) + (c[p][q][m][i] * x[p] * y[q]);
                    }
                }
                j[i][3 + m] = s1;
                j[3 + i][m] = s2;
            }
            j[i][6] = -x[i];
            j[3 + i][6] = -y[i];
            j[6][i] = x[i];
            j[7][3 + i] = y[i];
        }
        j
    };
    let mut z = [x[0], x[1], x[2], y[0], y[1], y[2], theta];
    let (mut f, mut norm) = eval(&z);
    let mut mu = 1e-10;
    let mut it = 0;
    'outer: while it < max_iter && norm > 0.0 {
        it += 1;
        let j = jac(&z);
        let mut jtj = [[0.0; 7]; 7];
        let mut jtf = [0.0; 7];
        for r in 0..8 {
            for a in 0..7 {
                jtf[a] -= j[r][a] * f[r];
                for b in 0..7 {
                    jtj[a][b] += j[r][a] * j[r][b];
                }
            }
        }
        let dmax = (0..7).fold(0.0_f64, |m, a| m.max(jtj[a][a])).max(1e-300);
        let mut accepted = false;
        while mu < 1e6 {
            let mut m = jtj;
            for (a, row) in m.iter_mut().enumerate() {
                row[a] += mu * dmax;
            }
            let Some(d) = solve(&m, &jtf) else {
                mu *= 10.0;
                continue;
            };
            let trial: [f64; 7] = std::array::from_fn(|a| z[a] + d[a]);
            let (ft, nt) = eval(&trial);
            if nt.is_finite() && nt < norm {
                let step = d.iter().map(|v| v * v).sum::<f64>().sqrt();
                z = trial;
                f = ft;
                norm = nt;
                mu = (mu * 0.1).max(1e-14);
                accepted = true;
                if step < 1e-15 {
                    break 'outer;
                }
                break;
            }
            mu *= 10.0;
        }
        if !accepted {
            break;
        }
    }
    finish_m(c, [z[0], z[1], z[2]], [z[3], z[4], z[5]], z[6], it)
}

fn finish_m(c: &Full, x: Vec3, y: Vec3, theta: f64, iterations: usize) -> Iterate {
    let (x, y) = match (unit(&x), unit(&y)) {
        (Some(x), Some(y)) => (x, y),
        _ => {
            return Iterate {
                x,
                y,
                theta,
                residual: f64::INFINITY,
                iterations,
            }
        }
    };
    let theta = quad(c, &x, &y);
    let residual = m_residual_full(c, theta, &x, &y);
    Iterate {
        x,
        y,
        theta,
        residual: if residual.is_finite() {
            residual
        } else {
            f64::INFINITY
        },
        iterations,
    }
}

/// Damped Newton on `A(x)x = ηx`, `|x|² = 1`.
fn polish_z(c: &Full, x: Vec3, eta: f64, max_iter: usize) -> (Vec3, f64, f64, usize) {
    let eval = |z: &[f64; 4]| -> ([f64; 4], f64) {
        let x = [z[0], z[1], z[2]];
        let ax = mv(&a_mat(c, &x), &x);
        let mut f = [0.0; 4];
        for i in 0..3 {
            f[i] = ax[i] - z[3] * x[i];
        }
        f[3] = 0.5 * (dot(&x, &x) - 1.0);
        let n = f.iter().map(|v| v * v).sum();
        (f, n)
    };
    let jac = |z: &[f64; 4]| -> [[f64; 4]; 4] {
        let x = [z[0], z[1], z[2]];
        let a = a_mat(c, &x);
        let mut j = [[0.0; 4]; 4];
        for i in 0..3 {
            for m in 0..3 {
                let mut s = 0.0;
                for p in 0..3 {
                    for q in 0..3 {
                        s += (c[i][m][p][q] + c[i][p][m][q]) * x[p] * x[q];
                    }
                }
                // The third product-rule term C_ijkm x_j x_k equals A(x)_im.
                j[i][m] = s + a[i][m] - if i == m { z[3] } else { 0.0 };
            }
            j[i][3] = -x[i];
            j[3][i] = x[i];
        }
        j
    };
    let mut z = [x[0], x[1], x[2], eta];
    let (mut f, mut norm) = eval(&z);
    let mut mu = 1e-10;
    let mut it = 0;
    'outer: while it < max_iter && norm > 0.0 {
        it += 1;
        let j = jac(&z);
        let mut jtj = [[0.0; 4]; 4];
        let mut jtf = [0.0; 4];
        for r in 0..4 {
            for a in 0..4 {
                jtf[a] -= j[r][a] * f[r];
                for b in 0..4 {
                    jtj[a][b] += j[r][a] * j[r][b];
                }
            }
        }
        let dmax = (0..4).fold(0.0_f64, |m, a| m.max(jtj[a][a])).max(1e-300);
        let mut accepted = false;
        while mu < 1e6 {
            let mut m = jtj;
            for (a, row) in m.iter_mut().enumerate() {
                row[a] += mu * dmax;
            }
            let Some(d) = solve(&m, &jtf) else {
                mu *= 10.0;
                continue;
            };
            let trial: [f64; 4] = std::array::from_fn(|a| z[a] + d[a]);
            let (ft, nt) = eval(&trial);
            if nt.is_finite() && nt < norm {
                let step = d.iter().map(|v| v * v).sum::<f64>().sqrt();
                z = trial;
                f = ft;
                norm = nt;
                mu = (mu * 0.1).max(1e-14);
                accepted = true;
                if step < 1e-15 {
                    break 'outer;
                }
                break;
            }
            mu *= 10.0;
        }
        if !accepted {
            break;
        }
    }
    let Some(x) = unit(&[z[0], z[1], z[2]]) else {
        return ([z[0], z[1], z[2]], z[3], f64::INFINITY, it);
    };
    let eta = quad(c, &x, &x);
    let r = z_residual_full(c, eta, &x);
    (x, eta, if r.is_finite() { r } else { f64::INFINITY }, it)
}

const WARMUP: usize = 30;
const POLISH: usize = 60;

fn m_candidates(c: &Full, cfg: &SolverConfig, start: usize) -> Vec<MEigenpair> {
    let mut rng = SplitMix64::new(cfg.seed, start as u64);
    let x0 = rng.unit_vector();
    let y0 = rng.unit_vector();
    let mut out = Vec::with_capacity(5);
    let mut push = |r: Iterate| {
        if !finite3(&r.x) || !finite3(&r.y) || !r.theta.is_finite() {
            return;
        }
        out.push(MEigenpair {
            theta: r.theta,
            x: r.x,
            y: r.y,
            residual: r.residual,
            iterations: r.iterations,
            branch: rank_of(&a_mat(c, &r.y), r.theta),
            converged: r.residual < cfg.tol,
            multiplicity: 1,
        });
    };
    let warm = WARMUP.min(cfg.max_iter);
    for b in Branch::ALL {
        if let Ok(w) = alternate_full(c, &x0, &y0, b, warm, cfg.tol) {
            if w.residual < cfg.tol {
                push(w);
            } else {
                let mut p = polish_m(c, w.x, w.y, w.theta, POLISH);
                p.iterations += w.iterations;
                push(p);
            }
        }
    }
    push(polish_m(c, x0, y0, quad(c, &x0, &y0), POLISH));
    push(polish_m(c, x0, x0, quad(c, &x0, &x0), POLISH));
    if let Ok(e) = symmetric_eigen(&b_mat(c, &x0)) {
        for k in 0..3 {
            let y = e.vectors[k];
            push(polish_m(c, x0, y, e.values[k], POLISH));
        }
    }
    out
}

fn z_candidates(c: &Full, cfg: &SolverConfig, start: usize) -> Vec<ZEigenpair> {
    let mut rng = SplitMix64::new(cfg.seed ^ 0x5A5A_5A5A_5A5A_5A5A, start as u64);
    let x0 = rng.unit_vector();
    let mut out = Vec::with_capacity(4);
    let mut push = |x: Vec3, eta: f64, residual: f64, iterations: usize| {
        if !finite3(&x) || !eta.is_finite() {
            return;
        }
        out.push(ZEigenpair {
            eta,
            x,
            residual,
            iterations,
            branch: rank_of(&a_mat(c, &x), eta),
            converged: residual < cfg.tol,
            multiplicity: 1,
        });
    };
    let warm = WARMUP.min(cfg.max_iter);
    for b in Branch::ALL {
        let mut x = x0;
        let mut ok = true;
        let mut it = 0;
        while it < warm {
            match branch_vector(&a_mat(c, &x), b, &x) {
                Ok(v) => x = v,
                Err(_) => {
                    ok = false;
                    break;
                }
            }
            it += 1;
            if z_residual_full(c, quad(c, &x, &x), &x) < cfg.tol {
                break;
            }
        }
        if ok {
            let (x, eta, r, k) = polish_z(c, x, quad(c, &x, &x), POLISH);
            push(x, eta, r, it + k);
        }
    }
    let (x, eta, r, k) = polish_z(c, x0, quad(c, &x0, &x0), POLISH);
    push(x, eta, r, k);
    out
}

/// Groups values whose relative gap is within `tol` (chained from each
/// group's smallest member) and keeps the lowest-residual representative.
fn dedup<T: Copy>(
    mut items: Vec<T>,
    key: impl Fn(&T) -> f64,
    res: impl Fn(&T) -> f64,
    set_mult: impl Fn(&mut T, usize),
    tol: f64,
) -> Vec<T> {
    items.sort_by(|a, b| key(a).total_cmp(&key(b)));
    let mut out: Vec<T> = Vec::new();
    let mut anchor = f64::NAN;
    let mut count = 0;
    for it in items {
        let k = key(&it);
        if !out.is_empty() && (k - anchor).abs() <= tol * anchor.abs().max(1.0) {
            count += 1;
            let last = out.last_mut().unwrap();
            if res(&it) < res(last) {
                *last = it;
            }
            set_mult(last, count);
        } else {
            anchor = k;
            count = 1;
            let mut it = it;
            set_mult(&mut it, 1);
            out.push(it);
        }
    }
    out
}

/// Deduplicated M-eigenpairs from `cfg.n_starts` seeded starts, ascending
/// in `θ`. Only pairs with residual below `cfg.tol` are kept.
pub fn m_spectrum(t: &ElasticityTensor, cfg: &SolverConfig) -> Result<MSpectrum> {
    cfg.validate()?;
    if !t.is_finite() {
        return Err(Error::NonFinite("tensor"));
    }
    let c = t.full();
    let all: Vec<MEigenpair> = (0..cfg.n_starts)
        .into_par_iter()
        .flat_map_iter(|s| m_candidates(&c, cfg, s))
        .collect();
    let attempts = all.len();
    let good: Vec<MEigenpair> = all.into_iter().filter(|p| p.converged).collect();
    let converged = good.len();
    let pairs = dedup(
        good,
        |p| p.theta,
        |p| p.residual,
        |p, m| p.multiplicity = m,
        cfg.dedup_tol,
    );
    Ok(MSpectrum {
        pairs,
        attempts,
        converged,
    })
}

/// Deduplicated Z-eigenpairs (`y = x`), ascending in `η`.
pub fn z_spectrum(t: &ElasticityTensor, cfg: &SolverConfig) -> Result<ZSpectrum> {
    cfg.validate()?;
    if !t.is_finite() {
        return Err(Error::NonFinite("tensor"));
    }
    let c = t.full();
    let all: Vec<ZEigenpair> = (0..cfg.n_starts)
        .into_par_iter()
        .flat_map_iter(|s| z_candidates(&c, cfg, s))
        .collect();
    let attempts = all.len();
    let good: Vec<ZEigenpair> = all.into_iter().filter(|p| p.converged).collect();
    let converged = good.len();
    let pairs = dedup(
        good,
        |p| p.eta,
        |p| p.residual,
        |p, m| p.multiplicity = m,
        cfg.dedup_tol,
    );
    Ok(ZSpectrum {
        pairs,
        attempts,
        converged,
    })
}

/// Half-sphere grid: `n` inclinations in `[0, π/2]` times `n` azimuths in
/// `[0, 2π)`. Antipodal points are redundant since `f` is even in `x` and `y`.
fn half_sphere(n: usize) -> Vec<Vec3> {
    let mut pts = Vec::with_capacity(n * n);
    for i in 0..n {
        let inc = std::f64::consts::FRAC_PI_2 * i as f64 / (n - 1) as f64;
        let (si, ci) = inc.sin_cos();
        for j in 0..n {
            let az = std::f64::consts::TAU * j as f64 / n as f64;
            let (sa, ca) = az.sin_cos();
            pts.push([si * ca, si * sa, ci]);
        }
    }
    pts
}

/// Grid minimum of `f(x, y)` over unit `x`, `y` and its location.
pub fn oracle_min_f(t: &ElasticityTensor, cfg: &SolverConfig) -> Result<(f64, Vec3, Vec3)> {
    let best = grid_scan(t, cfg, 1)?;
    Ok(best[0])
}

/// Row minima of the grid scan, best `k` rows, ascending.
fn grid_scan(t: &ElasticityTensor, cfg: &SolverConfig, k: usize) -> Result<Vec<(f64, Vec3, Vec3)>> {
    cfg.validate()?;
    if !t.is_finite() {
        return Err(Error::NonFinite("tensor"));
    }
    let c = t.full();
    let pts = half_sphere(cfg.grid_n);
    // f = yᵀB(x)y = Σ b_jl y_j y_l over the six distinct monomials.
    let mono: Vec<[f64; 6]> = pts
        .iter()
        .map(|y| {
            [
                y[0] * y[0],
                y[1] * y[1],
                y[2] * y[2],
                2.0 * y[1] * y[2],
                2.0 * y[0] * y[2],
                2.0 * y[0] * y[1],
            ]
        })
        .collect();
    let rows: Vec<(f64, usize, usize)> = pts
        .par_iter()
        .enumerate()
        .map(|(ix, x)| {
            let b = b_mat(&c, x);
            let w = [b[0][0], b[1][1], b[2][2], b[1][2], b[0][2], b[0][1]];
            let mut best = (f64::INFINITY, ix, 0);
            for (iy, m) in mono.iter().enumerate() {
                let v = w[0] * m[0]
                    + w[1] * m[1]
                    + w[2] * m[2]
                    + w[3] * m[3]
                    + w[4] * m[4]
                    + w[5] * m[5];
                if v < best.0 {
                    best = (v, ix, iy);
                }
            }
            best
        })
        .collect();
    let mut order: Vec<&(f64, usize, usize)> = rows.iter().collect();
    order.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    Ok(order
        .into_iter()
        .take(k.max(1))
        .map(|&(v, ix, iy)| (v, pts[ix], pts[iy]))
        .collect())
}

/// Local descent from a grid point: smallest-branch alternation, which
/// never increases `f`, followed by a Newton polish.
pub fn oracle_refine(
    t: &ElasticityTensor,
    x: &Vec3,
    y: &Vec3,
    cfg: &SolverConfig,
) -> Result<MEigenpair> {
    let c = t.full();
    let w = alternate_full(&c, x, y, Branch::Smallest, cfg.max_iter, cfg.tol)?;
    let p = if w.residual < cfg.tol {
        w
    } else {
        let p = polish_m(&c, w.x, w.y, w.theta, POLISH);
        if p.residual < w.residual && p.theta <= w.theta + 1e-9 * w.theta.abs().max(1.0) {
            Iterate {
                iterations: w.iterations + p.iterations,
                ..p
            }
        } else {
            w
        }
    };
    Ok(MEigenpair {
        theta: p.theta,
        x: p.x,
        y: p.y,
        residual: p.residual,
        iterations: p.iterations,
        branch: Branch::Smallest,
        converged: p.residual < cfg.tol,
        multiplicity: 1,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleResult {
    pub grid_n: usize,
    pub grid_min: f64,
    pub grid_x: Vec3,
    pub grid_y: Vec3,
    /// Lowest refined pair over the best grid rows.
    pub refined: MEigenpair,
}

/// Grid scan plus refinement from the `ORACLE_SEEDS` best grid rows.
pub fn oracle(t: &ElasticityTensor, cfg: &SolverConfig) -> Result<OracleResult> {
    const ORACLE_SEEDS: usize = 4;
    let seeds = grid_scan(t, cfg, ORACLE_SEEDS)?;
    let mut refined: Option<MEigenpair> = None;
    for (_, x, y) in &seeds {
        let r = oracle_refine(t, x, y, cfg)?;
        if refined.is_none_or(|b| r.theta < b.theta) {
            refined = Some(r);
        }
    }
    let (grid_min, grid_x, grid_y) = seeds[0];
    Ok(OracleResult {
        grid_n: cfg.grid_n,
        grid_min,
        grid_x,
        grid_y,
        refined: refined.expect("at least one seed"),
    })
}
