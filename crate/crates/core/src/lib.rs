//! Exact combinatorial computation of component groups of Cartan subgroups
//! and of isotropy subgroups of parabolic CR algebras of real semisimple Lie
//! groups.
//!
//! Everything here is pure and `no_std` (with `alloc`): root systems and
//! Weyl-group actions ([`rootsys`]), exact integer linear algebra
//! ([`intlin`]), conjugations of real forms from Satake data ([`realform`]),
//! component groups of Cartan subgroups ([`charcomp`]) and isotropy data of
//! parabolic subalgebras ([`parabolic`]). File formats, the real-form
//! catalog and the command-line front end live in the `cartan-pi0` crate.

#![no_std]
#![allow(clippy::needless_range_loop)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod charcomp;
mod error;
pub mod intlin;
pub mod parabolic;
pub mod realform;
pub mod rootsys;

pub use error::{Error, Result};
