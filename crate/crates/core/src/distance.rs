use std::fmt;
use std::ops::Add;

/// A shortest-path length, or the absence of any path.
///
/// `Finite` orders before `Unreachable`, so `min` behaves as expected.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(u64),
    Unreachable,
}

/// Raw sentinel used by the inner search loops.
pub(crate) const INF: u64 = u64::MAX;

impl Distance {
    pub const ZERO: Distance = Distance::Finite(0);

    pub(crate) fn from_raw(raw: u64) -> Self {
        if raw == INF {
            Distance::Unreachable
        } else {
            Distance::Finite(raw)
        }
    }

    pub(crate) fn raw(self) -> u64 {
        match self {
            Distance::Finite(d) => d,
            Distance::Unreachable => INF,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Unreachable => None,
        }
    }

    /// Whether `self` sandwiches `exact`: `exact <= self <= factor * exact`,
    /// with both sides unreachable counting as agreement.
    pub fn within_factor(self, exact: Distance, factor: f64) -> bool {
        match (self, exact) {
            (Distance::Unreachable, Distance::Unreachable) => true,
            (Distance::Finite(a), Distance::Finite(e)) => {
                a >= e && (a - e) as f64 <= (factor - 1.0) * e as f64 * (1.0 + 1e-12)
            }
            _ => false,
        }
    }

    /// `self / exact` for two finite values; 1.0 when both are unreachable.
    pub fn ratio_to(self, exact: Distance) -> Option<f64> {
        match (self, exact) {
            (Distance::Unreachable, Distance::Unreachable) => Some(1.0),
            (Distance::Finite(_), Distance::Finite(0)) => Some(1.0),
            (Distance::Finite(a), Distance::Finite(e)) => Some(a as f64 / e as f64),
            _ => None,
        }
    }
}

impl Add for Distance {
    type Output = Distance;

    fn add(self, rhs: Distance) -> Distance {
        match (self, rhs) {
            (Distance::Finite(a), Distance::Finite(b)) => match a.checked_add(b) {
                Some(s) if s != INF => Distance::Finite(s),
                _ => Distance::Unreachable,
            },
            _ => Distance::Unreachable,
        }
    }
}

impl Add<u64> for Distance {
    type Output = Distance;

    fn add(self, rhs: u64) -> Distance {
        self + Distance::Finite(rhs)
    }
}

impl From<u64> for Distance {
    fn from(d: u64) -> Self {
        Distance::Finite(d)
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Unreachable => f.write_str("INF"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unreachable_absorbs_addition() {
        assert_eq!(Distance::Unreachable + 5, Distance::Unreachable);
        assert_eq!(
            Distance::Finite(3) + Distance::Unreachable,
            Distance::Unreachable
        );
        assert_eq!(Distance::Finite(3) + 4, Distance::Finite(7));
        assert_eq!(Distance::Finite(u64::MAX - 1) + 1, Distance::Unreachable);
    }

    #[test]
    fn finite_orders_before_unreachable() {
        assert!(Distance::Finite(u64::MAX - 1) < Distance::Unreachable);
        assert_eq!(
            Distance::Finite(9).min(Distance::Unreachable),
            Distance::Finite(9)
        );
    }

    #[test]
    fn sandwich_check() {
        let exact = Distance::Finite(100);
        assert!(Distance::Finite(100).within_factor(exact, 1.1));
        assert!(Distance::Finite(110).within_factor(exact, 1.1));
        assert!(!Distance::Finite(111).within_factor(exact, 1.1));
        assert!(!Distance::Finite(99).within_factor(exact, 1.1));
        assert!(!Distance::Unreachable.within_factor(exact, 2.0));
        assert!(Distance::Unreachable.within_factor(Distance::Unreachable, 1.0));
        assert!(!Distance::Finite(1).within_factor(Distance::Unreachable, 2.0));
    }

    #[test]
    fn display_uses_inf_token() {
        assert_eq!(Distance::Unreachable.to_string(), "INF");
        assert_eq!(Distance::Finite(42).to_string(), "42");
    }
}
