use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_traits::{Num, NumCast};

/// Scalar type used for edge and vertex weights.
///
/// The library is generic over this trait; `f64` is the default choice and
/// `f32` works where memory matters. `Display` must print a shortest
/// round-trip decimal representation (the standard float formatters do),
/// and `FromStr` must parse it back exactly.
pub trait Weight:
    Num + NumCast + PartialOrd + Copy + Default + Debug + Display + FromStr + Send + Sync + 'static
{
    /// False for NaN and infinities. Graph construction rejects weights for
    /// which this returns false.
    fn is_finite_value(self) -> bool;

    /// `steps` quarter units, i.e. `steps * 0.25`. Exact in binary floating
    /// point, which keeps weight sums order-independent.
    fn from_quarter_steps(steps: u32) -> Self {
        let steps = Self::from(steps).expect("quarter steps fit the scalar");
        let four = Self::from(4u8).expect("4 fits the scalar");
        steps / four
    }
}

impl Weight for f64 {
    fn is_finite_value(self) -> bool {
        self.is_finite()
    }
}

impl Weight for f32 {
    fn is_finite_value(self) -> bool {
        self.is_finite()
    }
}
