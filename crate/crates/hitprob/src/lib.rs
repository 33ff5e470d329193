//! Command-line support for `hitprob-core`: an on-disk cache of computed
//! quotients, the bundled reference lists, and a verification suite that
//! recomputes the published degree 9, 10 and 23 results.

pub mod cache;
pub mod engine;
pub mod fixtures;
pub mod verify;

pub use cache::{Cache, CacheKey};
pub use engine::Engine;
pub use fixtures::{Fixture, FixtureError, FixtureKind, FixtureSet};
pub use verify::{verify_paper, Claim, Scope, VerificationReport};
