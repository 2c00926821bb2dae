use std::fmt;
use std::num::NonZeroI32;

/// Direction of a single wrap around a nail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Clockwise,
    Counterclockwise,
}

impl Orientation {
    pub fn flipped(self) -> Self {
        match self {
            Orientation::Clockwise => Orientation::Counterclockwise,
            Orientation::Counterclockwise => Orientation::Clockwise,
        }
    }

    pub fn sign(self) -> i32 {
        match self {
            Orientation::Clockwise => 1,
            Orientation::Counterclockwise => -1,
        }
    }
}

/// One wrap of the rope: `x<i>` (clockwise) or `X<i>` (counterclockwise).
///
/// Stored as a nonzero signed integer, `+i` for clockwise and `-i` for
/// counterclockwise around nail `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(NonZeroI32);

impl Letter {
    /// Panics if `nail` is zero or does not fit in an `i32`.
    pub fn new(nail: u32, orientation: Orientation) -> Self {
        assert!(nail >= 1, "nail indices start at 1");
        let nail = i32::try_from(nail).expect("nail index out of range");
        Letter(NonZeroI32::new(nail * orientation.sign()).unwrap())
    }

    pub fn cw(nail: u32) -> Self {
        Letter::new(nail, Orientation::Clockwise)
    }

    pub fn ccw(nail: u32) -> Self {
        Letter::new(nail, Orientation::Counterclockwise)
    }

    /// Returns `None` for zero.
    pub fn from_signed(value: i32) -> Option<Self> {
        NonZeroI32::new(value)
            .filter(|v| v.get() != i32::MIN)
            .map(Letter)
    }

    pub fn to_signed(self) -> i32 {
        self.0.get()
    }

    pub fn nail(self) -> u32 {
        self.0.get().unsigned_abs()
    }

    pub fn orientation(self) -> Orientation {
        if self.0.get() > 0 {
            Orientation::Clockwise
        } else {
            Orientation::Counterclockwise
        }
    }

    pub fn inverse(self) -> Self {
        Letter(-self.0)
    }

    pub fn cancels(self, other: Letter) -> bool {
        self.0.get() == -other.0.get()
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.orientation() {
            Orientation::Clockwise => write!(f, "x{}", self.nail()),
            Orientation::Counterclockwise => write!(f, "X{}", self.nail()),
        }
    }
}
