use exact_core::{frac, int, Scalar};
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const MAX_NUMERATOR: i64 = 10;
pub const MAX_DENOMINATOR: i64 = 11;

/// Constraints on a parameter draw.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DrawStrategy {
    /// `t ∉ {0, 1, -1}`; nonzero `x`, `z`; distinct nonzero alphabets with `u_k v_l ∉ {1, 1/t}`.
    GenericT { vars: usize },
    /// `0 < t < 1`, alphabets in `[-1/2, 1/2]` so that `|ǔ_k v_l| ≤ 1/4`.
    Gaudin { vars: usize },
    /// `0 < t < 1`, `1/2 ≤ x ≤ 2`, `0 < s ≤ 1/4`, `0 < |z| ≤ 1/2`, alphabet in `[-3/5, 3/5]`.
    Bethe { vars: usize },
}

/// One draw of every parameter a suite might need.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamSet {
    pub t: Scalar,
    pub x: Scalar,
    pub z: Scalar,
    pub s: Scalar,
    pub u: Vec<Scalar>,
    pub v: Vec<Scalar>,
}

/// Deterministic stream of rational draws.
pub struct Drawer {
    rng: ChaCha8Rng,
}

impl Drawer {
    pub fn new(seed: u64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.gen()
    }

    /// Rational with `|value| ≤ bound` and denominator `≤ MAX_DENOMINATOR`.
    pub fn rational(&mut self, bound: &Scalar) -> Scalar {
        let den = self.rng.gen_range(1..=MAX_DENOMINATOR);
        let limit = (bound * int(den)).floor().to_integer().to_i64().unwrap_or(MAX_NUMERATOR * den);
        frac(self.rng.gen_range(-limit..=limit), den)
    }

    fn rational_where(&mut self, bound: &Scalar, ok: impl Fn(&Scalar) -> bool) -> Scalar {
        loop {
            let r = self.rational(bound);
            if ok(&r) {
                return r;
            }
        }
    }

    fn alphabet(&mut self, len: usize, bound: &Scalar, nonzero: bool) -> Vec<Scalar> {
        let mut out: Vec<Scalar> = Vec::with_capacity(len);
        while out.len() < len {
            let r = self.rational(bound);
            if (nonzero && r.is_zero()) || out.contains(&r) {
                continue;
            }
            out.push(r);
        }
        out
    }

    pub fn draw(&mut self, strategy: DrawStrategy) -> ParamSet {
        let big = int(MAX_NUMERATOR);
        let unit = |r: &Scalar| r.is_positive() && *r < int(1);
        match strategy {
            DrawStrategy::GenericT { vars } => {
                let t = self.rational_where(&big, |r| !r.is_zero() && r.abs() != int(1));
                let x = self.rational_where(&big, |r| !r.is_zero());
                let z = self.rational_where(&big, |r| !r.is_zero());
                loop {
                    let u = self.alphabet(vars, &big, true);
                    let v = self.alphabet(vars, &big, true);
                    let regular = u.iter().all(|a| v.iter().all(|b| a * b != int(1) && &t * a * b != int(1)));
                    if regular {
                        return ParamSet { t, x, z, s: Scalar::zero(), u, v };
                    }
                }
            }
            DrawStrategy::Gaudin { vars } => {
                let t = self.rational_where(&int(1), unit);
                let half = frac(1, 2);
                let u = self.alphabet(vars, &half, false);
                let v = self.alphabet(vars, &half, false);
                ParamSet { t, x: int(1), z: Scalar::zero(), s: Scalar::zero(), u, v }
            }
            DrawStrategy::Bethe { vars } => {
                let t = self.rational_where(&int(1), unit);
                let x = self.rational_where(&int(2), |r| *r >= frac(1, 2));
                let s = self.rational_where(&frac(1, 4), |r| r.is_positive());
                let z = self.rational_where(&frac(1, 2), |r| !r.is_zero());
                let neg_s = -&s;
                let u = loop {
                    let u = self.alphabet(vars, &frac(3, 5), true);
                    if !u.contains(&neg_s) {
                        break u;
                    }
                };
                ParamSet { t, x, z, s, u, v: vec![] }
            }
        }
    }
}

/// `draws` parameter sets from `seed` under `strategy`.
pub fn draw_params(seed: u64, strategy: DrawStrategy, draws: usize) -> Vec<ParamSet> {
    let mut drawer = Drawer::new(seed);
    (0..draws).map(|_| drawer.draw(strategy)).collect()
}
