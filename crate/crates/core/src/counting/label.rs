use std::fmt;

/// The value `f(x)` a counting step assigns to an element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CountLabel {
    /// `k_j`: the `k`-th element counted into category `j`.
    Count { k: usize, category: usize },
    /// `T_j`: deferred at position `j`; a candidate start point.
    Deferred { position: usize },
    /// `s^r(1_j)`: the `r`-th successor within history type `j`.
    Successor { r: usize, kind: usize },
}

impl fmt::Display for CountLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CountLabel::Count { k, category } => write!(f, "{k}_{category}"),
            CountLabel::Deferred { position } => write!(f, "T_{position}"),
            CountLabel::Successor { r: 0, kind } => write!(f, "1_{kind}"),
            CountLabel::Successor { r: 1, kind } => write!(f, "s(1_{kind})"),
            CountLabel::Successor { r, kind } => write!(f, "s^{r}(1_{kind})"),
        }
    }
}
