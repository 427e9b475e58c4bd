pub mod groebner;
pub mod group;
pub mod liftring;
pub mod poly;
pub mod psring;
pub mod repcount;
pub mod verify;
