//! Partitions, their statistics, `t`-analogues and tableaux.

mod partition;
pub mod qanalog;
mod tableau;
mod tau;

pub use partition::{partitions_bounded, partitions_of, partitions_up_to, subpartitions, Cell, CellStats, Partition};
pub use qanalog::{binomial, phi, pochhammer, pochhammer_coeffs, q_pochhammer, t_binomial, t_factorial, t_integer};
pub use tableau::{enumerate_ssyt, psi_strip, psi_weight, Tableau};
pub use tau::tau_coeff;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing: {0:?}")]
    NotDecreasing(Vec<usize>),
    #[error("cannot parse partition {0:?}")]
    Parse(String),
}
