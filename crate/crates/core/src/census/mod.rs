//! Maximal-torus censuses of split finite reductive groups and exact
//! volumes of regular-semisimple classes and bounding sets.

pub mod enumerate;
pub mod group;
pub mod torus;
pub mod volume;
pub mod weyl;

pub use enumerate::{enumerate_group, GroupTable, Guard};
pub use group::{Family, GroupSpec};
pub use volume::{coset_volume_report, isogeny_count_check, np_value, volume_report, TorusVolume, VolumeReport};
pub use weyl::{class_equation, torus_order, weyl_twisted_classes, SignedPermutation, TorusClassRecord, TorusKey};
