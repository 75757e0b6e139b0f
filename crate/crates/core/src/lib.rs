pub mod characters;
pub mod cli;
pub mod cyclo;
pub mod drinfeld;
pub mod error;
pub mod group;
pub mod inertia;
pub mod product;

pub use characters::{CharacterTable, ClassFunction};
pub use cyclo::{Cyclotomic, Rational};
pub use error::{Error, Result};
pub use group::{FiniteGroup, GroupContext, Subgroup};
pub use inertia::{InertiaClass, Orbifold, PairSector, Sector};
pub use product::{ProductTable, RingReport};
