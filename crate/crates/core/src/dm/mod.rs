//! In-process simulation of distributed cover-edge counting and its
//! communication model.

mod comm;
mod fit;
mod partition;
mod report;
mod sim;

pub use comm::{
    bits_in_unit, ceil_log2, comm_volume_cetc_dm, comm_volume_previous, format_bits,
    model_bits_cetc_dm, model_bits_previous, ByteUnit, CetcDmVolume,
};
pub use fit::{fit_scaling, FitKind, ScalingFit};
pub use partition::{partition_graph, LocalGraph, Partition};
pub use report::{report, CommReport};
pub use sim::{simulate_cetc_dm, simulate_cetc_dm_with, DmRun, ExchangeLog, SimMode, Transfer};
