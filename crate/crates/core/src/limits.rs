use crate::error::{Error, Result};

/// Size guards for the exact solvers.
///
/// Defaults are documented on each field. They can be overridden with the
/// `MCOVER_LIMITS` environment variable, a comma-separated list of
/// `key=value` pairs, for example `MCOVER_LIMITS=nonzeros=50000,bruteforce=22`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum nonzeros in an LP constraint matrix (`nonzeros`, default 20 000).
    pub lp_nonzeros: usize,
    /// Maximum number of edges enumerated by subset brute force (`bruteforce`, default 20).
    pub brute_force_edges: usize,
    /// Maximum number of pattern vertices in sub-copy search (`pattern`, default 9).
    pub pattern_vertices: usize,
    /// Maximum branch-and-bound nodes per integral solve (`nodes`, default 50 000 000).
    pub search_nodes: u64,
    /// Maximum number of edges handed to the sunflower search (`sunflower`, default 400).
    pub sunflower_edges: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            lp_nonzeros: 20_000,
            brute_force_edges: 20,
            pattern_vertices: 9,
            search_nodes: 50_000_000,
            sunflower_edges: 400,
        }
    }
}

impl Limits {
    pub const ENV_VAR: &'static str = "MCOVER_LIMITS";

    /// Defaults overridden by `MCOVER_LIMITS` when it is set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(Self::ENV_VAR) {
            Ok(spec) => Self::default().with_overrides(&spec),
            Err(_) => Ok(Self::default()),
        }
    }

    pub fn with_overrides(mut self, spec: &str) -> Result<Self> {
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::Parameter(format!("expected key=value in limits, got {item:?}")))?;
            let parsed: u64 = value
                .trim()
                .parse()
                .map_err(|_| Error::Parameter(format!("limit {key} is not a number: {value:?}")))?;
            match key.trim() {
                "nonzeros" => self.lp_nonzeros = parsed as usize,
                "bruteforce" => self.brute_force_edges = parsed as usize,
                "pattern" => self.pattern_vertices = parsed as usize,
                "nodes" => self.search_nodes = parsed,
                "sunflower" => self.sunflower_edges = parsed as usize,
                other => return Err(Error::Parameter(format!("unknown limit {other:?}"))),
            }
        }
        Ok(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overrides_parse() {
        let l = Limits::default()
            .with_overrides("nonzeros=5, bruteforce=3")
            .unwrap();
        assert_eq!(l.lp_nonzeros, 5);
        assert_eq!(l.brute_force_edges, 3);
        assert_eq!(l.pattern_vertices, 9);
    }

    #[test]
    fn bad_override_rejected() {
        assert!(Limits::default().with_overrides("speed=9").is_err());
        assert!(Limits::default().with_overrides("nonzeros").is_err());
        assert!(Limits::default().with_overrides("nonzeros=x").is_err());
    }
}
