pub mod arith;
pub mod cf;
pub mod diamond;
pub mod natext;
pub mod regions;
pub mod report;

// The book's snippets run as doctests: each chapter becomes the doc comment
// of an empty module, one module per chapter so a failure names its file.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/expansions.md")]
    mod expansions {}
    #[doc = include_str!("../../../book/src/regions.md")]
    mod regions {}
    #[doc = include_str!("../../../book/src/diamond-map.md")]
    mod diamond_map {}
    #[doc = include_str!("../../../book/src/natural-extension.md")]
    mod natural_extension {}
    #[doc = include_str!("../../../book/src/trapping.md")]
    mod trapping {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}
