//! Dataset ingestion and preprocessing: directory-per-class images, FER-style
//! CSV, a procedural synthetic generator, grayscale/resize normalization, and
//! the PCA reconstruction-error filter.
//!
//! Every loaded image ends up 48x48 grayscale in [0,1]. Loading is
//! deterministic (lexicographic file order), so loading the same source twice
//! yields identical datasets.

mod csvio;
mod dataset;
mod filter;
mod image_buf;
mod loader;
mod pgm;
mod synth;

pub use csvio::load_csv_dataset;
pub use dataset::{Dataset, EmotionLabels, Sample, Split, SplitRatios, split};
pub use filter::{FilterReport, pca_filter};
pub use image_buf::{GrayImage, resize_bilinear};
pub use loader::{load_directory_dataset, load_image};
pub use pgm::{read_pgm, write_pgm};
pub use synth::synth_dataset;

/// Side length every pipeline image is normalized to.
pub const IMAGE_SIZE: usize = 48;
