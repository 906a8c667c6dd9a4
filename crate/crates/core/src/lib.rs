pub mod error;
pub mod exactnum;
pub mod curvering;
pub mod laurent;
pub mod pellfam;
pub mod ode;
pub mod quad;
pub mod cli;

pub use error::{Error, Result};

// keeps the book's code blocks compiling and passing
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/exact-scalars.md")]
    mod exact_scalars {}
    #[doc = include_str!("../../../book/src/laurent.md")]
    mod laurent {}
    #[doc = include_str!("../../../book/src/curve-ring.md")]
    mod curve_ring {}
    #[doc = include_str!("../../../book/src/families.md")]
    mod families {}
    #[doc = include_str!("../../../book/src/closed-forms.md")]
    mod closed_forms {}
    #[doc = include_str!("../../../book/src/odes.md")]
    mod odes {}
    #[doc = include_str!("../../../book/src/orthogonality.md")]
    mod orthogonality {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
