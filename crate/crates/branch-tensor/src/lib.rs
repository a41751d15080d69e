//! Branching `GL_n ⊃ GL_{n−1}` and the Cartan component `V_{λ+λ′} ⊂ V_λ ⊗ V_λ′`.

pub mod branch;
pub mod cartan;
pub mod error;
pub mod tensor;

pub use branch::{branch_inject, branch_restrict};
pub use cartan::{cartan_inject, cartan_project, cartan_table, verify_cartan_table, CartanTable};
pub use error::BranchError;
pub use tensor::{TensorModule, TensorVector};
