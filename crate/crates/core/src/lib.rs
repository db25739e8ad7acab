pub mod choicefn;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod fixtures;
pub mod io;
pub mod ground;
pub mod lattice;
pub mod latticecf;
pub mod preorder;
pub mod pretop;
pub mod random;
pub mod search;
pub mod supermod;
pub mod transport;
pub mod weakorder;

pub use choicefn::{AxiomReport, ChoiceFunction, Witness};
pub use error::{Error, Result};
pub use family::SetFamily;
pub use ground::{GroundSet, Subset};
pub use lattice::FiniteLattice;
pub use latticecf::{LatticeCF, LatticeFunction};
pub use preorder::Preorder;
pub use supermod::{Modularity, ModularityClass, SetFunction};
pub use transport::{Lift, LiftKind, PointMap};
pub use weakorder::SubsetWeakOrder;
