/// Neumaier's variant of Kahan summation. The sieve sums ~5×10⁷ logarithms
/// and the explicit formula sums 10⁵ oscillating terms; naive accumulation
/// loses several digits on both.
#[derive(Clone, Copy, Debug, Default)]
pub struct KahanSum {
    sum: f64,
    compensation: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.compensation += (self.sum - t) + v;
        } else {
            self.compensation += (v - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn total(&self) -> f64 {
        self.sum + self.compensation
    }

    /// Magnitude of the running correction — a cheap proxy for how much
    /// cancellation the naive sum would have suffered.
    pub fn compensation(&self) -> f64 {
        self.compensation.abs()
    }
}

impl std::iter::FromIterator<f64> for KahanSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut k = KahanSum::new();
        for v in iter {
            k.add(v);
        }
        k
    }
}
