//! Compensated summation and a minimal double-double number.

/// Kahan-Babuska compensated accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub struct Kahan {
    sum: f64,
    comp: f64,
}

impl Kahan {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Unevaluated sum of two doubles, `hi + lo`, giving roughly 32 significant
/// digits. Only the operations needed for phase accumulation and argument
/// reduction are provided.
#[derive(Debug, Clone, Copy)]
pub struct TwoFloat {
    pub hi: f64,
    pub lo: f64,
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let err = f64::mul_add(a, b, -p);
    (p, err)
}

impl TwoFloat {
    pub fn from(x: f64) -> Self {
        Self { hi: x, lo: 0.0 }
    }

    pub fn add(self, other: TwoFloat) -> Self {
        let (s, e) = two_sum(self.hi, other.hi);
        let lo = e + self.lo + other.lo;
        let (hi, lo) = two_sum(s, lo);
        Self { hi, lo }
    }

    pub fn add_f64(self, x: f64) -> Self {
        self.add(TwoFloat::from(x))
    }

    pub fn mul_f64(self, x: f64) -> Self {
        let (p, e) = two_prod(self.hi, x);
        let lo = e + self.lo * x;
        let (hi, lo) = two_sum(p, lo);
        Self { hi, lo }
    }

    pub fn value(self) -> f64 {
        self.hi + self.lo
    }
}

/// cos(x) with double-double range reduction, usable for phases up to ~1e12.
pub fn cos_large(x: f64) -> f64 {
    if x.abs() < 1e6 {
        return x.cos();
    }
    // 2*pi in double-double
    let twopi = TwoFloat {
        hi: 6.283185307179586,
        lo: 2.4492935982947064e-16,
    };
    let n = (x / twopi.hi).round();
    // r = x - n*2pi computed in double-double
    let prod = twopi.mul_f64(-n);
    let r = prod.add_f64(x);
    r.value().cos()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kahan_small_increments() {
        let mut k = Kahan::new();
        for _ in 0..1_000_000 {
            k.add(0.1);
        }
        assert!((k.value() - 100_000.0).abs() < 1e-9);
    }

    #[test]
    fn cos_reduction_matches_for_moderate_args() {
        for &x in &[1.0, 1e3, 9.9e5] {
            assert_eq!(cos_large(x), x.cos());
        }
    }

    #[test]
    fn cos_reduction_large_phase() {
        // x = 1e8 + 0.25; reference value from 50-digit arithmetic
        let x = 100000000.25f64;
        let reference = -0.5825795108441392; // cos(x) computed at 40 digits
        assert!((cos_large(x) - reference).abs() < 1e-12);
    }
}
