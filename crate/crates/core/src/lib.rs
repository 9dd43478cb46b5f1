//! Exact Turaev–Viro modules of satellite knots.
//!
//! ```
//! use tvsat::{make_context, Engine, KnotExpr};
//!
//! let ctx = make_context(5, None)?;
//! let engine = Engine::new(&ctx);
//! let k: KnotExpr = "sat(double(1,U),P21)".parse()?;
//! let z = engine.module(&k, 0)?;
//! assert_eq!(z.charpoly()?.degree(), 5);
//! # Ok::<(), tvsat::Error>(())
//! ```

pub mod engine;
pub mod error;
pub mod linalg;
pub mod recoupling;
pub mod scalars;
pub mod wheels;

pub use engine::{CompanionData, Engine, KnotExpr, PatternId, TVModule};
pub use error::{Error, Result};
pub use linalg::{CharPoly, ExactMatrix};
pub use scalars::{make_context, FieldContext, Scalar, ScalarRepr};
pub use wheels::NWheel;
