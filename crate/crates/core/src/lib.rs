pub mod bijection;
pub mod cyclotomic;
pub mod error;
pub mod identities;
pub mod permstat;
pub mod polyring;
