//! K-theoretic Pieri coefficients for Grassmannians of type A, maximal
//! orthogonal Grassmannians and Lagrangian Grassmannians.
//!
//! The coefficient `c^ν_{λ,p}` of `O^ν` in `O^λ · O^p` is available from
//! four engines that are checked against each other:
//!
//! * [`coeff_direct`]: alternating sum over south-east corner subsets of
//!   closed-form Euler characteristics,
//! * [`coeff_recursive`]: the recursive rules, memoized,
//! * [`coeff_tableau`]: signed counts of KOG/KLG-tableaux (OG and LG),
//! * [`lenart_closed_form`]: signed binomials (type A).
//!
//! [`ring`] builds sparse vectors over the Schubert basis on top of these.

pub mod error;
pub mod euler;
pub mod json_int;
pub mod recursion;
pub mod ring;
pub mod shapes;
pub mod tableaux;

pub use error::{Error, Result};
pub use euler::{chi, coeff_direct, corner_sum, h, Coefficient, Engine};
pub use recursion::{coeff_recursive, lenart_closed_form, RecursiveEngine};
pub use ring::{dual_class, euler_pairing, pieri_multiply, special_chain, KVector};
pub use shapes::{make_skew, ArmDecomposition, Cell, DiagramKind, DiagramStats, Partition, SkewShape, Space};
pub use tableaux::{coeff_tableau, enumerate, signed_count, Label, Mode, Tableau};

/// Computes `c^ν_{λ,p}` with the chosen engine.
pub fn coefficient(engine: Engine, lambda: &Partition, p: i64, nu: &Partition, space: Space) -> Result<Coefficient> {
    match engine {
        Engine::Direct => coeff_direct(lambda, p, nu, space),
        Engine::Recursive => coeff_recursive(lambda, p, nu, space),
        Engine::Tableau => coeff_tableau(lambda, p, nu, space),
        Engine::Lenart => lenart_closed_form(lambda, p, nu, space),
    }
}
