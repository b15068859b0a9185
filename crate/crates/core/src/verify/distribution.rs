use rand::Rng;

use crate::error::{BoundError, Result};
use crate::interval::Interval;
use crate::mgf::log_add_exp;

const PROB_SUM_TOL: f64 = 1e-12;
const MEAN_TOL: f64 = 1e-12;

/// Finite-support zero-mean law on a host interval.
///
/// Zero-weight atoms are dropped on construction.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteDistribution {
    support: Vec<f64>,
    probs: Vec<f64>,
    cumulative: Vec<f64>,
    host: Interval,
}

impl DiscreteDistribution {
    pub fn new(host: Interval, support: Vec<f64>, probs: Vec<f64>) -> Result<Self> {
        if support.len() != probs.len() {
            return Err(BoundError::LengthMismatch {
                what: "support and probabilities",
                expected: support.len(),
                got: probs.len(),
            });
        }
        if support.is_empty() {
            return Err(BoundError::InvalidDistribution("empty support".into()));
        }
        for (&x, &p) in support.iter().zip(&probs) {
            if !p.is_finite() || p < 0.0 {
                return Err(BoundError::InvalidDistribution(format!("weight {p} is not a probability")));
            }
            if !(x >= host.a() && x <= host.b()) {
                return Err(BoundError::InvalidDistribution(format!("atom {x} lies outside {host}")));
            }
        }
        let total: f64 = probs.iter().sum();
        if (total - 1.0).abs() > PROB_SUM_TOL {
            return Err(BoundError::InvalidDistribution(format!("weights sum to {total}")));
        }
        let mean: f64 = support.iter().zip(&probs).map(|(x, p)| x * p).sum();
        if mean.abs() > MEAN_TOL * host.width() {
            return Err(BoundError::InvalidDistribution(format!("mean {mean} is not zero")));
        }
        let (support, probs): (Vec<f64>, Vec<f64>) =
            support.into_iter().zip(probs).filter(|&(_, p)| p > 0.0).unzip();
        let cumulative = probs
            .iter()
            .scan(0.0, |acc, p| {
                *acc += p;
                Some(*acc)
            })
            .collect();
        Ok(DiscreteDistribution {
            support,
            probs,
            cumulative,
            host,
        })
    }

    pub fn support(&self) -> &[f64] {
        &self.support
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn host(&self) -> &Interval {
        &self.host
    }

    pub fn mean(&self) -> f64 {
        self.support.iter().zip(&self.probs).map(|(x, p)| x * p).sum()
    }

    /// Inverse-CDF draw.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        let u: f64 = rng.random();
        let idx = self.cumulative.partition_point(|&c| c <= u);
        self.support[idx.min(self.support.len() - 1)]
    }

    /// `ln E[exp(sX)]`, evaluated as a log-sum-exp.
    pub fn ln_mgf(&self, s: f64) -> Result<f64> {
        if !s.is_finite() {
            return Err(BoundError::invalid("s", s, "must be finite"));
        }
        Ok(self
            .support
            .iter()
            .zip(&self.probs)
            .map(|(x, p)| p.ln() + s * x)
            .fold(f64::NEG_INFINITY, log_add_exp))
    }
}

/// `E[exp(sX)] = Σ p_i exp(s x_i)`.
pub fn mgf(dist: &DiscreteDistribution, s: f64) -> Result<f64> {
    if !s.is_finite() {
        return Err(BoundError::invalid("s", s, "must be finite"));
    }
    let value: f64 = dist
        .support
        .iter()
        .zip(&dist.probs)
        .map(|(x, p)| p * (s * x).exp())
        .sum();
    if value.is_finite() {
        Ok(value)
    } else {
        Err(BoundError::Overflow("discrete MGF"))
    }
}

/// Zero-mean law on the endpoints: `P(a) = b / (b - a)`, `P(b) = -a / (b - a)`.
pub fn extremal_two_point(iv: &Interval) -> DiscreteDistribution {
    DiscreteDistribution::new(
        *iv,
        vec![iv.a(), iv.b()],
        vec![iv.one_minus_lambda(), iv.lambda()],
    )
    .expect("extremal law is a valid zero-mean distribution")
}

/// `c` times the extremal law plus `1 - c` mass at zero.
pub fn zero_mean_mixture(iv: &Interval, c: f64) -> Result<DiscreteDistribution> {
    if !(0.0..=1.0).contains(&c) {
        return Err(BoundError::invalid("c", c, "must lie in [0, 1]"));
    }
    DiscreteDistribution::new(
        *iv,
        vec![iv.a(), 0.0, iv.b()],
        vec![c * iv.one_minus_lambda(), 1.0 - c, c * iv.lambda()],
    )
}

fn uniform_open<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    // (0, 1]
    1.0 - rng.random::<f64>()
}

/// Zero-mean law on `{x1, x2}` with `a <= x1 < 0 < x2 <= b` drawn at random.
pub fn random_two_point<R: Rng + ?Sized>(iv: &Interval, rng: &mut R) -> DiscreteDistribution {
    let x1 = iv.a() * uniform_open(rng);
    let x2 = iv.b() * uniform_open(rng);
    let p2 = -x1 / (x2 - x1);
    DiscreteDistribution::new(*iv, vec![x1, x2], vec![x2 / (x2 - x1), p2])
        .expect("two-point law is zero-mean by construction")
}

/// Random atoms and weights on `[a, b]`, re-centred by mixing in an
/// endpoint atom: a positive mean `m` gets weight `m / (m - a)` at `a`, a
/// negative one weight `m / (m - b)` at `b`.
fn random_grid<R: Rng + ?Sized>(iv: &Interval, rng: &mut R) -> DiscreteDistribution {
    let atoms = rng.random_range(2..=8);
    let mut support: Vec<f64> = (0..atoms)
        .map(|_| iv.a() + rng.random::<f64>() * iv.width())
        .map(|x| x.clamp(iv.a(), iv.b()))
        .collect();
    let mut probs: Vec<f64> = (0..atoms).map(|_| uniform_open(rng)).collect();
    let total: f64 = probs.iter().sum();
    probs.iter_mut().for_each(|p| *p /= total);
    let mean: f64 = support.iter().zip(&probs).map(|(x, p)| x * p).sum();
    let anchor = if mean > 0.0 { iv.a() } else { iv.b() };
    if mean != 0.0 {
        let theta = mean / (mean - anchor);
        probs.iter_mut().for_each(|p| *p *= 1.0 - theta);
        support.push(anchor);
        probs.push(theta);
    }
    DiscreteDistribution::new(*iv, support, probs).expect("re-centred law is zero-mean")
}

/// Draws from one of three zero-mean families: re-centred random grids,
/// random two-point laws, and extremal/zero mixtures.
pub fn random_zero_mean<R: Rng + ?Sized>(iv: &Interval, rng: &mut R) -> DiscreteDistribution {
    match rng.random_range(0..3) {
        0 => random_grid(iv, rng),
        1 => random_two_point(iv, rng),
        _ => zero_mean_mixture(iv, rng.random::<f64>()).expect("c drawn from [0, 1)"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mgf::two_point_mgf;
    use crate::verify::StreamRng;
    use approx::assert_relative_eq;

    fn iv(a: f64, b: f64) -> Interval {
        Interval::new(a, b).unwrap()
    }

    #[test]
    fn extremal_weights() {
        let d = extremal_two_point(&iv(-2.0, 1.0));
        assert_eq!(d.support(), &[-2.0, 1.0]);
        assert_relative_eq!(d.probs()[0], 1.0 / 3.0, max_relative = 1e-15);
        assert_relative_eq!(d.probs()[1], 2.0 / 3.0, max_relative = 1e-15);
        assert_eq!(extremal_two_point(&iv(-1.0, 1.0)).probs(), &[0.5, 0.5]);
        assert_eq!(extremal_two_point(&iv(-1.0, 3.0)).probs(), &[0.75, 0.25]);
    }

    #[test]
    fn mixture_family() {
        let x = iv(-2.0, 1.0);
        assert_eq!(zero_mean_mixture(&x, 1.0).unwrap(), extremal_two_point(&x));
        let point = zero_mean_mixture(&x, 0.0).unwrap();
        assert_eq!((point.support(), point.probs()), (&[0.0][..], &[1.0][..]));
        let half = zero_mean_mixture(&x, 0.5).unwrap();
        assert_eq!(half.support(), &[-2.0, 0.0, 1.0]);
        assert_relative_eq!(half.probs()[0], 1.0 / 6.0, max_relative = 1e-15);
        assert_eq!(half.probs()[1], 0.5);
        assert_relative_eq!(half.probs()[2], 1.0 / 3.0, max_relative = 1e-15);
        assert!(zero_mean_mixture(&x, 1.5).is_err());
        assert!(zero_mean_mixture(&x, -0.1).is_err());
    }

    #[test]
    fn mgf_values() {
        let x = iv(-2.0, 1.0);
        let point = zero_mean_mixture(&x, 0.0).unwrap();
        assert_eq!(mgf(&point, 3.7).unwrap(), 1.0);
        assert_relative_eq!(mgf(&extremal_two_point(&x), 1.0).unwrap(), 1.8572997, epsilon = 1e-6);
        assert_relative_eq!(mgf(&zero_mean_mixture(&x, 0.5).unwrap(), 1.0).unwrap(), 1.4286499, epsilon = 1e-6);
        assert_relative_eq!(
            mgf(&extremal_two_point(&x), 0.4).unwrap(),
            two_point_mgf(&x, 0.4).unwrap(),
            max_relative = 1e-14
        );
        assert_eq!(mgf(&extremal_two_point(&x), 0.0).unwrap(), 1.0);
        assert!(mgf(&extremal_two_point(&x), 1e4).is_err());
        assert!(extremal_two_point(&x).ln_mgf(1e4).unwrap().is_finite());
    }

    #[test]
    fn validation() {
        let x = iv(-1.0, 1.0);
        assert!(DiscreteDistribution::new(x, vec![-1.0, 1.0], vec![0.5]).is_err());
        assert!(DiscreteDistribution::new(x, vec![-1.0, 1.0], vec![0.4, 0.4]).is_err());
        assert!(DiscreteDistribution::new(x, vec![-1.0, 1.0], vec![0.3, 0.7]).is_err());
        assert!(DiscreteDistribution::new(x, vec![-2.0, 1.0], vec![1.0 / 3.0, 2.0 / 3.0]).is_err());
        assert!(DiscreteDistribution::new(x, vec![-1.0, 1.0], vec![-0.5, 1.5]).is_err());
        assert!(DiscreteDistribution::new(x, vec![], vec![]).is_err());
    }

    #[test]
    fn random_laws_are_valid_and_centred() {
        let family = StreamRng::new(9);
        for (k, host) in [iv(-2.0, 1.0), iv(-0.01, 50.0), iv(-1e3, 1e-2)].iter().enumerate() {
            for i in 0..300u64 {
                let mut rng = family.stream(i + 1000 * k as u64);
                let d = random_zero_mean(host, &mut rng);
                assert!(d.mean().abs() <= 1e-12 * host.width());
                let total: f64 = d.probs().iter().sum();
                assert!((total - 1.0).abs() <= 1e-12);
                assert!(d.support().iter().all(|&x| x >= host.a() && x <= host.b()));
            }
        }
    }

    #[test]
    fn sampling_frequencies() {
        let d = zero_mean_mixture(&iv(-2.0, 1.0), 0.5).unwrap();
        let mut rng = StreamRng::new(1).stream(0);
        let mut counts = [0u32; 3];
        let draws = 60_000;
        for _ in 0..draws {
            let x = d.sample(&mut rng);
            let idx = d.support().iter().position(|&s| s == x).unwrap();
            counts[idx] += 1;
        }
        for (c, p) in counts.iter().zip(d.probs()) {
            let freq = *c as f64 / draws as f64;
            assert!((freq - p).abs() < 0.01, "{freq} vs {p}");
        }
    }
}
