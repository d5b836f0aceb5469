use thiserror::Error;

use crate::rings::Profile;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("profile mismatch: {0:?} vs {1:?}")]
    ProfileMismatch(Profile, Profile),
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("variable {0} is not assigned")]
    Unassigned(String),
    #[error("variable {0} assigned zero")]
    ZeroAssignment(String),
    #[error("negative power of a non-monomial")]
    NotInvertible,
    #[error("polynomial is not symmetric in x1..x{0}")]
    NotSymmetric(usize),
    #[error("singular linear system")]
    Singular,
    #[error("class is not in the span of the basis")]
    OutsideSpan,
    #[error("kernel of the restriction map is not preserved")]
    KernelViolation,
    #[error("term count {0} exceeds cap {1}")]
    TermCap(usize, usize),
    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Unwind with `e` from an operator that cannot return a `Result`; `catch` turns it back.
pub(crate) fn raise(e: Error) -> ! {
    std::panic::panic_any(e)
}

/// Run `f`, converting an unwind raised with an `Error` payload into `Err`.
pub fn catch<T>(f: impl FnOnce() -> Result<T>) -> Result<T> {
    match std::panic::catch_unwind(std::panic::AssertUnwindSafe(f)) {
        Ok(r) => r,
        Err(payload) => match payload.downcast::<Error>() {
            Ok(e) => Err(*e),
            Err(other) => std::panic::resume_unwind(other),
        },
    }
}

/// Panic hook that stays silent for `Error` payloads and defers to the previous hook otherwise.
pub fn install_quiet_hook() {
    let prev = std::panic::take_hook();
    std::panic::set_hook(Box::new(move |info| {
        if info.payload().downcast_ref::<Error>().is_none() {
            prev(info);
        }
    }));
}
