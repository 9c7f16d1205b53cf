pub mod error;
pub mod exactnum;
pub mod highest;
pub mod izergin;
pub mod params;
pub mod partitions;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use exactnum::{LaurentSeries, Rational, Scalar};
pub use izergin::{Kernel, Side};
pub use params::{sample_generic, Config, ParameterSet};
pub use highest::{hc, HcQuery, Rep};
