use sgb_core::error::{EnergyError, FamilyError, GroupError, SpectrumError};
use sgb_core::Error;

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Success = 0,
    Usage = 1,
    Validation = 2,
    Mismatch = 3,
    Numeric = 4,
}

impl Status {
    pub fn code(self) -> u8 {
        self as u8
    }
}

pub fn status_of(err: &Error) -> Status {
    match err {
        Error::Group(GroupError::BadSpec(_) | GroupError::Parse { .. } | GroupError::Io { .. }) => Status::Usage,
        Error::Group(_) | Error::Lattice(_) => Status::Validation,
        Error::Family(FamilyError::UnknownFamily(_)) => Status::Usage,
        Error::Family(_) => Status::Validation,
        Error::Spectrum(SpectrumError::DimensionLimit { .. }) => Status::Validation,
        Error::Spectrum(_) => Status::Numeric,
        Error::Energy(EnergyError::NoVertices) => Status::Validation,
        Error::Energy(_) => Status::Numeric,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mapping() {
        assert_eq!(status_of(&GroupError::BadSpec("x".into()).into()), Status::Usage);
        assert_eq!(status_of(&GroupError::NoIdentity.into()), Status::Validation);
        assert_eq!(status_of(&FamilyError::OrderLimit { order: 44, limit: 40 }.into()), Status::Validation);
        assert_eq!(status_of(&SpectrumError::NonConvergence { sweeps: 1, off_norm: 1.0 }.into()), Status::Numeric);
        assert_eq!(
            status_of(&EnergyError::Indeterminate { what: "E vs n", difference: 0.0 }.into()),
            Status::Numeric
        );
    }
}
