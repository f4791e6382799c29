use num_rational::Ratio;

/// Exact rational, wide enough for every bound formula at the coordinate and
/// size limits of this crate.
pub type Rat = Ratio<i64>;

/// Which guarantee a [`BoundReport`] invokes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremTag {
    /// Uncolored lower bound (5n+1)/27.
    Uncolored,
    /// Depth-based bound: a connected matching of size at least max d(p).
    Deep,
    /// Colored bound (c-3)n/(6c) - 1/2, the stronger route for c > 7.
    ColoredHighC,
    /// Colored bound (c-1)n/(9c) - 1/3, the route for small c.
    ColoredLowC,
}

impl TheoremTag {
    /// The closed-form guarantee for the tag, when it has one. `Deep` is
    /// instance-specific (the maximum point depth) and yields `None`.
    pub fn formula(self, n: usize, c: usize) -> Option<Rat> {
        let n = n as i64;
        let c = c as i64;
        match self {
            TheoremTag::Uncolored => Some(Rat::new(5 * n + 1, 27)),
            TheoremTag::Deep => None,
            TheoremTag::ColoredHighC => {
                Some(Rat::new((c - 3) * n, 6 * c) - Rat::new(1, 2))
            }
            TheoremTag::ColoredLowC => Some(Rat::new((c - 1) * n, 9 * c) - Rat::new(1, 3)),
        }
    }
}

/// Achieved matching size against the guarantee of the invoked theorem.
///
/// `binding` is false when the instance missed a precondition (for the
/// colored routes, n below the size threshold), in which case the guarantee
/// is informational only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub n: usize,
    pub c: usize,
    pub achieved: usize,
    pub guaranteed: Rat,
    pub theorem: TheoremTag,
    pub binding: bool,
}

impl BoundReport {
    /// Smallest integer matching size consistent with the guarantee.
    pub fn required(&self) -> i64 {
        self.guaranteed.ceil().to_integer()
    }
}

impl std::fmt::Display for BoundReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "theorem={:?} n={} c={} achieved={} guaranteed={} required={} binding={}",
            self.theorem,
            self.n,
            self.c,
            self.achieved,
            self.guaranteed,
            self.required().max(0),
            self.binding
        )
    }
}
