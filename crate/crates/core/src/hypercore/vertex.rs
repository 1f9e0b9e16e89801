use std::cmp::Ordering;
use std::fmt;

/// Opaque vertex label.
///
/// Ordered by `(length, value)`, so integer-like tokens sort numerically
/// (`"2" < "10"`) and every token set has a deterministic canonical order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(token: impl Into<String>) -> Self {
        VertexId(token.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl Ord for VertexId {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for VertexId {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<&str> for VertexId {
    fn from(s: &str) -> Self {
        VertexId(s.to_owned())
    }
}

impl From<String> for VertexId {
    fn from(s: String) -> Self {
        VertexId(s)
    }
}

impl From<usize> for VertexId {
    fn from(n: usize) -> Self {
        VertexId(n.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn length_then_value() {
        let mut v: Vec<VertexId> = ["10", "2", "b", "a1", "1"].iter().map(|s| (*s).into()).collect();
        v.sort();
        let s: Vec<&str> = v.iter().map(VertexId::as_str).collect();
        assert_eq!(s, ["1", "2", "b", "10", "a1"]);
    }
}
