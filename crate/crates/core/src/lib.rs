pub mod ring;
pub mod partitions;
pub mod series;
pub mod characters;
pub mod fock;
pub mod verify;
pub mod cli;
