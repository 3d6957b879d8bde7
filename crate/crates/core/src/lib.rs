//! Exact classification of the reducibility type of rational trinomials
//! `x^n + A x^m + B`, together with the supporting machinery: a Zassenhaus
//! factorizer over Q, a registry of parametric trinomial families, the
//! elliptic curves attached to them, bounded-height point searches on the
//! auxiliary curves, and a verification harness that ties it all together.

pub mod arith;
pub mod elliptic;
pub mod factor;
pub mod families;
pub mod poly;
pub mod search;
pub mod trinomial;
pub mod verify;

pub use arith::{q, Rational};
pub use elliptic::{EcPoint, WeierstrassCurve};
pub use factor::{factor_over_q, rational_roots, Factorization};
pub use families::{FamilyId, FamilySample};
pub use poly::Poly;
pub use search::{FoundPoint, SquareConditionCurve};
pub use trinomial::{ReducibilityType, Trinomial};
pub use verify::{CheckStatus, VerificationReport};
