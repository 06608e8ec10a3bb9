pub mod cohomology;
pub mod graded;
pub mod hopf_shuffle;
pub mod prism;
pub mod shuffles;
pub mod tc_rules;
