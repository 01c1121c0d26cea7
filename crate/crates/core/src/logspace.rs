//! Nonnegative reals carried as natural logarithms.
//!
//! The error-budget and threshold formulas are products of powers of x,
//! log x and T with x as large as e^(8×10¹⁴); every quantity here is a
//! product/quotient (cheap in log space) or a sum of nonnegative terms
//! (log-sum-exp). Converting back to a linear f64 is allowed to overflow
//! to infinity — callers that need huge values keep the log.

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LogVal {
    ln: f64,
}

impl LogVal {
    pub const ZERO: LogVal = LogVal { ln: f64::NEG_INFINITY };

    pub fn from_ln(ln: f64) -> Self {
        LogVal { ln }
    }

    pub fn from_value(v: f64) -> Self {
        debug_assert!(v >= 0.0);
        LogVal { ln: v.ln() }
    }

    pub fn ln(self) -> f64 {
        self.ln
    }

    /// Linear value; +inf when the log exceeds f64 range.
    pub fn value(self) -> f64 {
        self.ln.exp()
    }

    pub fn mul(self, o: LogVal) -> LogVal {
        LogVal { ln: self.ln + o.ln }
    }

    pub fn div(self, o: LogVal) -> LogVal {
        LogVal { ln: self.ln - o.ln }
    }

    pub fn powf(self, e: f64) -> LogVal {
        LogVal { ln: self.ln * e }
    }

    /// log-sum-exp; exact when one side is ZERO.
    pub fn add(self, o: LogVal) -> LogVal {
        let (hi, lo) = if self.ln >= o.ln { (self.ln, o.ln) } else { (o.ln, self.ln) };
        if hi == f64::NEG_INFINITY {
            return LogVal::ZERO;
        }
        LogVal { ln: hi + (lo - hi).exp().ln_1p() }
    }
}

pub fn log_sum(terms: impl IntoIterator<Item = LogVal>) -> LogVal {
    terms.into_iter().fold(LogVal::ZERO, LogVal::add)
}
