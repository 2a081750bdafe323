//! One module per subcommand; each returns an unsorted [`crate::SuiteReport`].

pub mod asymptotics;
pub mod cicy;
pub mod constants;
pub mod matrices;
pub mod recognize;
pub mod verify;
