mod parser;
mod snd;
mod word;

pub use parser::{parse_presentation, Presentation, PresentationError};
pub use snd::{
    generate_snd_relators, ELetter, EWord, SigmaRange, SndError, SndOptions,
    SndRelator,
};
pub use word::{reduce, Word};
