pub mod cli;
pub mod cohomology;
pub mod comodules;
pub mod error;
pub mod hopf;
pub mod linalg;
pub mod measures;
pub mod ring;
