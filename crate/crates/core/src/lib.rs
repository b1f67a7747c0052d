#![no_std]

extern crate alloc;

pub mod audit;
pub mod combinat;
pub mod qdsl;
pub mod qfactory;
pub mod series;
