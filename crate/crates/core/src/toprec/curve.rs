use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};
use crate::series::FormalSeries;

/// One disc: `x`, `y` and an optional holomorphic part `sum b[j][k] z1^j z2^k`
/// added to the same-disc `W_{0,2}` (and, integrated, to the kernel).
#[derive(Clone, Debug)]
pub struct Disc {
    pub x: FormalSeries,
    pub y: FormalSeries,
    pub holomorphic: Vec<(i64, i64, Scalar)>,
}

#[derive(Clone, Debug)]
pub struct LocalSpectralCurve {
    pub discs: Vec<Disc>,
    /// `x` and `y` are known modulo `z^truncation`.
    pub truncation: i64,
}

/// On-disk curve: `{"discs": [{"x": [[exp, "p/q"], ..], "y": [..]}], "truncation": N}`.
/// A disc may add `"holomorphic": [[j, k, "p/q"], ..]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveSpec {
    pub discs: Vec<DiscSpec>,
    pub truncation: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscSpec {
    pub x: Vec<(i64, String)>,
    pub y: Vec<(i64, String)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub holomorphic: Vec<(i64, i64, String)>,
}

fn parse_terms(terms: &[(i64, String)]) -> Result<Vec<(i64, Scalar)>> {
    terms.iter().map(|(e, c)| Ok((*e, scalar::parse(c)?))).collect()
}

impl CurveSpec {
    pub fn to_curve(&self) -> Result<LocalSpectralCurve> {
        let discs = self
            .discs
            .iter()
            .map(|d| {
                let holomorphic = d
                    .holomorphic
                    .iter()
                    .map(|(j, k, c)| Ok((*j, *k, scalar::parse(c)?)))
                    .collect::<Result<Vec<_>>>()?;
                Ok(Disc {
                    x: FormalSeries::from_terms(&parse_terms(&d.x)?, self.truncation),
                    y: FormalSeries::from_terms(&parse_terms(&d.y)?, self.truncation),
                    holomorphic,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        LocalSpectralCurve::new(discs, self.truncation)
    }

    pub fn from_curve(curve: &LocalSpectralCurve) -> Self {
        let terms = |s: &FormalSeries| s.terms().map(|(e, c)| (e, scalar::format(c))).collect();
        CurveSpec {
            discs: curve
                .discs
                .iter()
                .map(|d| DiscSpec {
                    x: terms(&d.x),
                    y: terms(&d.y),
                    holomorphic: d.holomorphic.iter().map(|(j, k, c)| (*j, *k, scalar::format(c))).collect(),
                })
                .collect(),
            truncation: curve.truncation,
        }
    }
}

impl LocalSpectralCurve {
    /// Checks the normal form `x = z^2 + O(z^3)`, `y = z + O(z^2)` on every disc
    /// and that the holomorphic part is symmetric with non-negative exponents.
    pub fn new(discs: Vec<Disc>, truncation: i64) -> Result<Self> {
        if truncation < 4 {
            return Err(Error::Input("truncation must be at least 4".into()));
        }
        if discs.is_empty() {
            return Err(Error::Input("a spectral curve needs at least one disc".into()));
        }
        let discs: Vec<Disc> = discs
            .into_iter()
            .map(|d| Disc { x: d.x.truncate(truncation), y: d.y.truncate(truncation), holomorphic: d.holomorphic })
            .collect();
        for (a, d) in discs.iter().enumerate() {
            let bad = |what: &str| Err(Error::Input(format!("disc {a}: {what}")));
            if d.x.valuation() != Some(2) || !d.x.coeff(2)?.is_one() {
                return bad("x must be z^2 + (higher order terms)");
            }
            if d.y.valuation() != Some(1) || !d.y.coeff(1)?.is_one() {
                return bad("y must be z + (higher order terms)");
            }
            for (j, k, c) in &d.holomorphic {
                if *j < 0 || *k < 0 {
                    return bad("holomorphic part must have non-negative exponents");
                }
                let mirror: Scalar =
                    d.holomorphic.iter().filter(|(p, q, _)| p == k && q == j).map(|t| t.2.clone()).sum();
                if &mirror != c && !(j == k) {
                    return bad("holomorphic part must be symmetric");
                }
            }
        }
        Ok(LocalSpectralCurve { discs, truncation })
    }

    pub fn disc(&self, alpha: usize) -> Result<&Disc> {
        self.discs
            .get(alpha)
            .ok_or_else(|| Error::Input(format!("no disc {alpha}; the curve has {}", self.discs.len())))
    }
}

/// `x = z^2`, `y = z`.
pub fn airy_curve(truncation: i64) -> LocalSpectralCurve {
    let disc = Disc { x: FormalSeries::monomial(2, Scalar::one()), y: FormalSeries::z(), holomorphic: vec![] };
    LocalSpectralCurve::new(vec![disc], truncation).expect("Airy curve is in normal form")
}

/// Local charts of `x = z + 1/z`, `y = -1/z` at the branch points `z = 1` and `z = -1`.
///
/// At `z = 1` take `zeta = z - 1`: then `x - 2 = zeta^2 / (1 + zeta)` and
/// `y + 1 = zeta / (1 + zeta)`. At `z = -1` take `zeta = -(z + 1)` and flip the
/// signs of both `x` and `y`, which leaves `y dx` alone: the same two series come
/// out. The involution is exactly `sigma(zeta) = -zeta / (1 + zeta)`, which is
/// `z -> 1/z` in either chart.
pub fn catalan_local_curve(truncation: i64) -> LocalSpectralCurve {
    let alternating = |from: i64| -> Vec<(i64, Scalar)> {
        (from..truncation).map(|k| (k, if (k - from) % 2 == 0 { Scalar::one() } else { -Scalar::one() })).collect()
    };
    let disc = Disc {
        x: FormalSeries::from_terms(&alternating(2), truncation),
        y: FormalSeries::from_terms(&alternating(1), truncation),
        holomorphic: vec![],
    };
    LocalSpectralCurve::new(vec![disc.clone(), disc], truncation).expect("normal form")
}

/// The deck involution of `x` on disc `alpha`: `sigma(z) = -z + O(z^2)` with
/// `x(sigma(z)) = x(z)`. Known to `O(z^{N-1})` when `x` is known to `O(z^N)`.
///
/// Writing `x = z^2 u` and `xi = z sqrt(u)`, `sigma` is the fixed point of
/// `s -> -xi(z) / sqrt(u(s))`, which gains one correct order per step.
pub fn involution(curve: &LocalSpectralCurve, alpha: usize) -> Result<FormalSeries> {
    let disc = curve.disc(alpha)?;
    let n = curve.truncation;
    let u = disc.x.shift(-2);
    let root = u.sqrt()?;
    let xi = root.shift(1);
    let target = n - 1;
    let mut sigma = FormalSeries::from_terms(&[(1, -Scalar::one())], 2);
    for _ in 0..=n {
        if sigma.precision() >= target {
            break;
        }
        let prev = sigma.precision();
        let denom = root.compose(&sigma, n)?.inv(n)?;
        sigma = xi.neg().mul(&denom).truncate(target);
        if sigma.precision() <= prev {
            return Err(Error::Input(format!(
                "involution iteration stalled at O(z^{prev}); is x of the form z^2 + ..?"
            )));
        }
    }
    if sigma.precision() < target {
        return Err(Error::Input("involution iteration did not converge".into()));
    }
    let diff = disc.x.compose(&sigma, n)?.sub(&disc.x);
    if diff.valuation().is_some() {
        return Err(Error::Input(format!("x(sigma) != x: residual {diff:?}")));
    }
    let twice = sigma.compose(&sigma, n)?.sub(&FormalSeries::z());
    if twice.valuation().is_some() {
        return Err(Error::Input(format!("sigma(sigma(z)) != z: residual {twice:?}")));
    }
    Ok(sigma)
}

/// Expansion of `W_{0,2}(z1, z2) / dz1 dz2` for `|z1| < |z2|` up to `z1^max_power`:
/// `sum_p (p + 1) z1^p z2^{-p-2}` plus the holomorphic part on the same disc,
/// zero across discs. Entries are `((e1, e2), coefficient)`.
pub fn w02_expansion(
    curve: &LocalSpectralCurve,
    alpha: usize,
    beta: usize,
    max_power: i64,
) -> Result<Vec<((i64, i64), Scalar)>> {
    let disc = curve.disc(alpha)?;
    curve.disc(beta)?;
    if alpha != beta {
        return Ok(vec![]);
    }
    let mut out: Vec<((i64, i64), Scalar)> =
        (0..=max_power).map(|p| ((p, -p - 2), Scalar::from_integer((p + 1).into()))).collect();
    for (j, k, c) in &disc.holomorphic {
        if *j <= max_power && !c.is_zero() {
            out.push(((*j, *k), c.clone()));
        }
    }
    Ok(out)
}
