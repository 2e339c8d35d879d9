//! Classification of tight contact structures on handlebodies.
//!
//! A handlebody with convex boundary is cut along compressing disks into a
//! ball. Each disk carries a chord diagram (its dividing set); a choice of one
//! diagram per disk is a configuration. Configurations whose rounded ball
//! boundary has a single dividing curve are joined by bypass moves, and the
//! components made only of such configurations correspond to the tight
//! contact structures.
//!
//! ```
//! use tight_handlebody::graph::{classify, ExploreOptions};
//! use tight_handlebody::surface::{Handlebody, HandlebodyPresentation};
//!
//! let h = Handlebody::new(HandlebodyPresentation::solid_torus(3, 1)).unwrap();
//! let report = classify(&h, &ExploreOptions::default()).unwrap();
//! assert_eq!(report.tight_count, 3);
//! ```

pub mod chord;
pub mod cli;
pub mod error;
pub mod graph;
pub mod io;
pub mod oracles;
pub mod surface;

pub use error::{Error, Result};
