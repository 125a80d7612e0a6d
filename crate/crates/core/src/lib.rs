pub mod algebra;
pub mod algebra_file;
pub mod assoc_examples;
pub mod autos;
pub mod cli;
pub mod constructors;
pub mod dual;
pub mod error;
pub mod expmap;
pub mod fields;
mod gell_mann;
pub mod groups;
pub mod linalg;
pub mod report;
pub mod symcomp;
pub mod triality;
pub mod zorn;
