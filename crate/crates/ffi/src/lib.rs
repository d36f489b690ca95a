//! C ABI for the phasespace library.
//!
//! Conventions:
//! - every fallible function returns a `PsStatus`; results go through out-pointers
//! - `PsField` and `PsOperator` are opaque heap handles released with their `_free` function
//! - 4×4 operators cross the boundary as 16 `PsComplex` values in row-major order
//! - the message for the most recent failure on the calling thread is available from
//!   `ps_last_error_message`

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use phasespace::em::{self, EMField};
use phasespace::operator::matrix_exp;
use phasespace::space::{scalar_product, PhaseVector};
use phasespace::triproduct::{d_basis, tri_product};
use phasespace::{Complex64, PhaseError, PhaseOperator, PoincareGenerator, Representation};

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    NotReal = 3,
    IndexOutOfRange = 4,
    UnknownLabel = 5,
    NonFinite = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PsComplex {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for PsComplex {
    fn from(z: Complex64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

impl From<PsComplex> for Complex64 {
    fn from(z: PsComplex) -> Self {
        Complex64::new(z.re, z.im)
    }
}

/// Uniform electromagnetic field.
pub struct PsField(EMField);

/// Linear operator on the complex phase space.
pub struct PsOperator(PhaseOperator);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(err: &PhaseError) -> PsStatus {
    match err {
        PhaseError::NotReal { .. } => PsStatus::NotReal,
        PhaseError::NonFinite => PsStatus::NonFinite,
        PhaseError::IndexOutOfRange(_) | PhaseError::SpatialIndexOutOfRange(_) => PsStatus::IndexOutOfRange,
        PhaseError::UnknownGenerator(_) => PsStatus::UnknownLabel,
        _ => PsStatus::InvalidArgument,
    }
}

fn fail(status: PsStatus, msg: impl AsRef<str>) -> PsStatus {
    set_last_error(msg.as_ref());
    status
}

impl From<PhaseError> for PsStatus {
    fn from(err: PhaseError) -> Self {
        fail(status_of(&err), err.to_string())
    }
}

/// Runs `f`, converting panics into `PsStatus::Panic`.
fn guard(f: impl FnOnce() -> Result<(), PsStatus>) -> PsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PsStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => fail(PsStatus::Panic, "internal panic"),
    }
}

unsafe fn read<'a, T>(p: *const T) -> Result<&'a T, PsStatus> {
    p.as_ref()
        .ok_or_else(|| fail(PsStatus::NullPointer, "null pointer argument"))
}

unsafe fn read_array<T: Copy, const N: usize>(p: *const T) -> Result<[T; N], PsStatus> {
    if p.is_null() {
        return Err(fail(PsStatus::NullPointer, "null pointer argument"));
    }
    Ok(ptr::read(p as *const [T; N]))
}

unsafe fn write<T>(p: *mut T, value: T) -> Result<(), PsStatus> {
    if p.is_null() {
        return Err(fail(PsStatus::NullPointer, "null output pointer"));
    }
    p.write(value);
    Ok(())
}

unsafe fn write_array<T, const N: usize>(p: *mut T, value: [T; N]) -> Result<(), PsStatus> {
    write(p as *mut [T; N], value)
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, PsStatus> {
    if p.is_null() {
        return Err(fail(PsStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(PsStatus::InvalidArgument, "string is not valid UTF-8"))
}

unsafe fn read_vector(p: *const PsComplex) -> Result<PhaseVector, PsStatus> {
    let raw: [PsComplex; 4] = read_array(p)?;
    Ok(PhaseVector::try_new(raw.map(Complex64::from))?)
}

unsafe fn write_vector(p: *mut PsComplex, v: &PhaseVector) -> Result<(), PsStatus> {
    write_array(p, v.coords().map(PsComplex::from))
}

unsafe fn emit_operator(out: *mut *mut PsOperator, op: PhaseOperator) -> Result<(), PsStatus> {
    write(out, Box::into_raw(Box::new(PsOperator(op))))
}

/// Static description of a status code. Never null.
#[no_mangle]
pub extern "C" fn ps_status_message(status: PsStatus) -> *const c_char {
    let s: &'static CStr = match status {
        PsStatus::Ok => c"ok",
        PsStatus::NullPointer => c"null pointer",
        PsStatus::InvalidArgument => c"invalid argument",
        PsStatus::NotReal => c"momentum is not real",
        PsStatus::IndexOutOfRange => c"index out of range",
        PsStatus::UnknownLabel => c"unknown label",
        PsStatus::NonFinite => c"non-finite value",
        PsStatus::Panic => c"internal panic",
    };
    s.as_ptr()
}

/// Message for the last failure on this thread. Valid until the next failing call
/// on the same thread. Never null.
#[no_mangle]
pub extern "C" fn ps_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Creates a field from `e[3]` and `b[3]`.
///
/// # Safety
/// `e` and `b` must point to three doubles each; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ps_field_new(e: *const f64, b: *const f64, out: *mut *mut PsField) -> PsStatus {
    guard(|| {
        let field = EMField::try_new(read_array(e)?, read_array(b)?)?;
        write(out, Box::into_raw(Box::new(PsField(field))))
    })
}

/// # Safety
/// `field` must come from `ps_field_new` and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn ps_field_free(field: *mut PsField) {
    if !field.is_null() {
        drop(Box::from_raw(field));
    }
}

/// Invariant `z = Σ (E + iB)ⱼ²`.
///
/// # Safety
/// `field` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ps_field_invariant(field: *const PsField, out: *mut PsComplex) -> PsStatus {
    guard(|| write(out, em::invariant_z(&read(field)?.0).z.into()))
}

/// Real field tensor `Σ Eⱼ D₀ⱼ + Bⱼ D⊥₀ⱼ`.
///
/// # Safety
/// `field` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ps_field_tensor(field: *const PsField, out: *mut *mut PsOperator) -> PsStatus {
    guard(|| emit_operator(out, *em::field_tensor(&read(field)?.0).operator()))
}

/// Complex Faraday tensor `𝔉_c`.
///
/// # Safety
/// `field` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ps_faraday_tensor(field: *const PsField, out: *mut *mut PsOperator) -> PsStatus {
    guard(|| emit_operator(out, em::faraday_tensor(&read(field)?.0)))
}

/// Closed-form `exp(τ 𝔉_c)`.
///
/// # Safety
/// `field` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ps_exp_faraday(field: *const PsField, tau: f64, out: *mut *mut PsOperator) -> PsStatus {
    guard(|| {
        if !tau.is_finite() {
            return Err(fail(PsStatus::NonFinite, "tau is not finite"));
        }
        emit_operator(out, em::exp_faraday(&read(field)?.0, tau))
    })
}

/// Closed-form momentum at proper time `tau` from a real `p0[4]`.
///
/// # Safety
/// `p0` and `out` must point to four doubles.
#[no_mangle]
pub unsafe extern "C" fn ps_evolve_closed_form(
    field: *const PsField,
    p0: *const f64,
    tau: f64,
    out: *mut f64,
) -> PsStatus {
    guard(|| {
        let field = &read(field)?.0;
        let p0 = PhaseVector::from_real(read_array(p0)?);
        let p = em::evolve_closed_form(field, &p0, tau)?;
        write_array(out, p.real_part())
    })
}

/// RK4 momentum at proper time `tau` using `steps` steps.
///
/// # Safety
/// `p0` and `out` must point to four doubles.
#[no_mangle]
pub unsafe extern "C" fn ps_evolve_numeric(
    field: *const PsField,
    p0: *const f64,
    tau: f64,
    steps: usize,
    out: *mut f64,
) -> PsStatus {
    guard(|| {
        let field = &read(field)?.0;
        let p0 = PhaseVector::from_real(read_array(p0)?);
        let p = em::evolve_numeric(field, &p0, tau, steps)?;
        write_array(out, p.real_part())
    })
}

/// Operator from 16 row-major entries.
///
/// # Safety
/// `entries` must point to 16 values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ps_operator_new(entries: *const PsComplex, out: *mut *mut PsOperator) -> PsStatus {
    guard(|| {
        let raw: [PsComplex; 16] = read_array(entries)?;
        if raw.iter().any(|z| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(fail(PsStatus::NonFinite, "operator entry is not finite"));
        }
        emit_operator(out, PhaseOperator::from_fn(|r, c| raw[r * 4 + c].into()))
    })
}

/// # Safety
/// `op` must come from this library and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn ps_operator_free(op: *mut PsOperator) {
    if !op.is_null() {
        drop(Box::from_raw(op));
    }
}

/// Copies the 16 row-major entries into `out`.
///
/// # Safety
/// `op` must be a live handle; `out` must hold 16 values.
#[no_mangle]
pub unsafe extern "C" fn ps_operator_entries(op: *const PsOperator, out: *mut PsComplex) -> PsStatus {
    guard(|| {
        let op = &read(op)?.0;
        write_array(
            out,
            std::array::from_fn::<PsComplex, 16, _>(|k| op.entry(k / 4, k % 4).into()),
        )
    })
}

/// `out = op · v` for complex `v[4]`.
///
/// # Safety
/// `v` and `out` must hold four values.
#[no_mangle]
pub unsafe extern "C" fn ps_operator_apply(
    op: *const PsOperator,
    v: *const PsComplex,
    out: *mut PsComplex,
) -> PsStatus {
    guard(|| {
        let op = &read(op)?.0;
        write_vector(out, &op.apply(&read_vector(v)?))
    })
}

/// New handle holding `a · b`.
///
/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ps_operator_compose(
    a: *const PsOperator,
    b: *const PsOperator,
    out: *mut *mut PsOperator,
) -> PsStatus {
    guard(|| emit_operator(out, read(a)?.0.compose(&read(b)?.0)))
}

/// New handle holding `exp(t · op)`.
///
/// # Safety
/// `op` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ps_operator_exp(op: *const PsOperator, t: f64, out: *mut *mut PsOperator) -> PsStatus {
    guard(|| {
        if !t.is_finite() {
            return Err(fail(PsStatus::NonFinite, "t is not finite"));
        }
        emit_operator(out, matrix_exp(&read(op)?.0.scale_real(t)))
    })
}

/// Operator image of an angular generator such as `"M01"` in the representation
/// `"spin1"`, `"spin_half_plus"` or `"spin_half_minus"`.
///
/// # Safety
/// `rep` and `label` must be NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ps_generator_image(
    rep: *const c_char,
    label: *const c_char,
    out: *mut *mut PsOperator,
) -> PsStatus {
    guard(|| {
        let rep: Representation = read_str(rep)?
            .parse()
            .map_err(|e: String| fail(PsStatus::UnknownLabel, e))?;
        let generator: PoincareGenerator = read_str(label)?.parse()?;
        if generator.is_translation() {
            return Err(fail(
                PsStatus::InvalidArgument,
                "translations act on the vector part and have no operator image",
            ));
        }
        emit_operator(out, rep.angular_operator(generator))
    })
}

/// Basis operator `D_{αβ}` for `α, β` in `0..=3`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ps_d_basis(alpha: usize, beta: usize, out: *mut *mut PsOperator) -> PsStatus {
    guard(|| {
        for idx in [alpha, beta] {
            if idx > 3 {
                return Err(PhaseError::IndexOutOfRange(idx).into());
            }
        }
        emit_operator(out, d_basis(alpha, beta))
    })
}

/// Bilinear scalar product `η_{μν} a^μ b^ν`.
///
/// # Safety
/// `a`, `b` must hold four values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ps_scalar_product(a: *const PsComplex, b: *const PsComplex, out: *mut PsComplex) -> PsStatus {
    guard(|| write(out, scalar_product(&read_vector(a)?, &read_vector(b)?).into()))
}

/// Tri-product `{a, b, c}`.
///
/// # Safety
/// `a`, `b`, `c` and `out` must hold four values.
#[no_mangle]
pub unsafe extern "C" fn ps_tri_product(
    a: *const PsComplex,
    b: *const PsComplex,
    c: *const PsComplex,
    out: *mut PsComplex,
) -> PsStatus {
    guard(|| {
        let v = tri_product(&read_vector(a)?, &read_vector(b)?, &read_vector(c)?);
        write_vector(out, &v)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn library_errors_map_to_status_codes() {
        assert_eq!(status_of(&PhaseError::NonFinite), PsStatus::NonFinite);
        assert_eq!(status_of(&PhaseError::IndexOutOfRange(9)), PsStatus::IndexOutOfRange);
        assert_eq!(
            status_of(&PhaseError::UnknownGenerator("X".into())),
            PsStatus::UnknownLabel
        );
        assert_eq!(status_of(&PhaseError::ZeroSteps), PsStatus::InvalidArgument);
        let err = PhaseError::NotReal {
            residual: 1.0,
            tolerance: 1e-12,
        };
        assert_eq!(status_of(&err), PsStatus::NotReal);
    }

    #[test]
    fn panics_become_a_status() {
        let status = guard(|| panic!("boom"));
        assert_eq!(status, PsStatus::Panic);
        let msg = unsafe { CStr::from_ptr(ps_last_error_message()) };
        assert_eq!(msg.to_str().unwrap(), "internal panic");
    }

    #[test]
    fn complex_conversion_is_lossless() {
        let z = Complex64::new(-1.5, 2.25);
        assert_eq!(Complex64::from(PsComplex::from(z)), z);
    }
}
