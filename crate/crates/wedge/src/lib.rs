//! `Λ 𝔭_n^∨` under the dual adjoint action, the embedding of `V_{2ρ_n}`, and
//! the pairing against the top form of `𝔭_{n−1}`.

pub mod element;
pub mod ops;

pub use element::{Index, WedgeElement};
pub use ops::{
    ad_dual, ad_dual_weyl, ad_dual_wn, b, highest_wedge, inject_2rho, inject_2rho_table, restrict_iota, s_chain, s_chain_against,
    s_chain_closed_form, s_pairing, top_form, upper_wedge, WedgeError, WedgeModule,
};
