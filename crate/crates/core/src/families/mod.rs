//! Generators for the named instance families and seeded random instances.

mod join;
mod named;
mod plane;
mod random;
mod spec;

pub use join::{join, join_fractional_matching, Join};
pub use named::{gen_complete_subsets, gen_g42_witness, gen_star, gen_tripartite_7cycle};
pub use plane::{gen_projective_plane, is_prime, pencils, plane_order, ProjectivePlane};
pub use random::{gen_random, gen_random_bipartite, gen_random_partite, rng, FamilyRng};
pub use spec::{GenSpec, FAMILIES};
