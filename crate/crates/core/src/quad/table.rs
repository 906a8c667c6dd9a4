//! Gram tables over both kernels and the vanishing elliptic integrals.

use serde::Serialize;

use super::problem::{Kernel, OrthoProblem};
use super::rules::QuadResult;
use crate::error::{Error, Result};

#[derive(Clone, Debug, Serialize)]
pub struct OrthoCell {
    pub kind: Kernel,
    pub n: usize,
    pub m: usize,
    pub expected: f64,
    pub gauss: Option<QuadResult>,
    pub tanh_sinh: Option<QuadResult>,
}

impl OrthoCell {
    /// Largest deviation of an available method from the expected value.
    pub fn abs_err(&self) -> f64 {
        [&self.gauss, &self.tanh_sinh].iter().filter_map(|r| r.as_ref()).map(|r| (r.value - self.expected).abs()).fold(0.0, f64::max)
    }

    /// `|gauss - tanh_sinh|` when both were computed.
    pub fn method_gap(&self) -> Option<f64> {
        Some((self.gauss.as_ref()?.value - self.tanh_sinh.as_ref()?.value).abs())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Methods {
    pub gauss: bool,
    pub tanh_sinh: bool,
}

impl Methods {
    pub const BOTH: Methods = Methods { gauss: true, tanh_sinh: true };
}

#[derive(Clone, Debug, Serialize)]
pub struct OrthoTable {
    pub beta: f64,
    pub n_max: usize,
    pub tol: f64,
    pub cells: Vec<OrthoCell>,
}

/// All `(n, m)` cells with `n, m <= n_max` for each requested kernel.
pub fn ortho_table(beta: f64, n_max: usize, kinds: &[Kernel], methods: Methods, tol: f64) -> Result<OrthoTable> {
    OrthoProblem::new(beta, Kernel::First, 0, 0)?;
    let mut cells = Vec::new();
    for &kind in kinds {
        for n in 0..=n_max {
            for m in 0..=n_max {
                let p = OrthoProblem::new(beta, kind, n, m)?;
                cells.push(OrthoCell {
                    kind,
                    n,
                    m,
                    expected: p.expected(),
                    gauss: methods.gauss.then(|| p.integrate_gauss_chebyshev(p.default_nodes())),
                    tanh_sinh: methods.tanh_sinh.then(|| p.integrate_tanh_sinh(tol)),
                });
            }
        }
    }
    Ok(OrthoTable { beta, n_max, tol, cells })
}

impl OrthoTable {
    pub fn cells_of(&self, kind: Kernel) -> impl Iterator<Item = &OrthoCell> {
        self.cells.iter().filter(move |c| c.kind == kind)
    }

    pub fn cell(&self, kind: Kernel, n: usize, m: usize) -> Option<&OrthoCell> {
        self.cells.iter().find(|c| c.kind == kind && c.n == n && c.m == m)
    }

    /// Every value within `tol` of its expected value, and the two methods
    /// within `gap` of each other.
    pub fn passes(&self, tol: f64, gap: f64) -> bool {
        self.cells.iter().all(|c| c.abs_err() < tol && c.method_gap().is_none_or(|g| g < gap))
    }

    /// Columns `kind,n,m,value_gauss,value_ts,expected,abs_err`; missing
    /// values are left empty.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("kind,n,m,value_gauss,value_ts,expected,abs_err\n");
        let fmt = |r: &Option<QuadResult>| r.as_ref().map(|r| format!("{:.17e}", r.value)).unwrap_or_default();
        for c in &self.cells {
            out.push_str(&format!(
                "{},{},{},{},{},{:.17e},{:.3e}\n",
                c.kind.name(),
                c.n,
                c.m,
                fmt(&c.gauss),
                fmt(&c.tanh_sinh),
                c.expected,
                c.abs_err()
            ));
        }
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EllipticCheck {
    pub beta: f64,
    pub n: usize,
    pub m: usize,
    pub tol: f64,
    pub first: QuadResult,
    pub second: QuadResult,
}

impl EllipticCheck {
    pub fn holds(&self) -> bool {
        self.first.value.abs() < self.tol && self.second.value.abs() < self.tol
    }
}

/// For `n + m` odd both raw integrals are elliptic integrals that vanish by
/// orthogonality; evaluates them by tanh-sinh.
pub fn elliptic_identity_check(beta: f64, n: usize, m: usize, tol: f64) -> Result<EllipticCheck> {
    if (n + m) % 2 == 0 {
        return Err(Error::Parity { n, m });
    }
    // integrate well below the vanishing threshold
    let quad_tol = (tol * 1e-2).max(1e-13);
    let first = OrthoProblem::new(beta, Kernel::First, n, m)?.integrate_tanh_sinh(quad_tol);
    let second = OrthoProblem::new(beta, Kernel::Second, n, m)?.integrate_tanh_sinh(quad_tol);
    Ok(EllipticCheck { beta, n, m, tol, first, second })
}
