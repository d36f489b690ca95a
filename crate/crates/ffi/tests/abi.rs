use std::ffi::CStr;
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use phasespace_ffi::*;

fn c(re: f64, im: f64) -> PsComplex {
    PsComplex { re, im }
}

fn entries(op: *const PsOperator) -> [PsComplex; 16] {
    let mut out = [PsComplex::default(); 16];
    assert_eq!(unsafe { ps_operator_entries(op, out.as_mut_ptr()) }, PsStatus::Ok);
    out
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(ps_last_error_message()) }
        .to_string_lossy()
        .into_owned()
}

#[test]
fn field_lifecycle_and_evolution() {
    let (e, b) = ([1.0, 0.0, 0.0], [0.0, 0.0, 0.0]);
    let mut field = ptr::null_mut();
    assert_eq!(
        unsafe { ps_field_new(e.as_ptr(), b.as_ptr(), &mut field) },
        PsStatus::Ok
    );

    let mut z = PsComplex::default();
    assert_eq!(unsafe { ps_field_invariant(field, &mut z) }, PsStatus::Ok);
    assert_eq!(z, c(1.0, 0.0));

    let p0 = [1.0, 0.0, 0.0, 0.0];
    let (mut closed, mut numeric) = ([0.0; 4], [0.0; 4]);
    unsafe {
        assert_eq!(
            ps_evolve_closed_form(field, p0.as_ptr(), 2.0, closed.as_mut_ptr()),
            PsStatus::Ok
        );
        assert_eq!(
            ps_evolve_numeric(field, p0.as_ptr(), 2.0, 10_000, numeric.as_mut_ptr()),
            PsStatus::Ok
        );
    }
    assert!((closed[0] - 2f64.cosh()).abs() < 1e-13);
    assert!((closed[1] + 2f64.sinh()).abs() < 1e-13);
    for k in 0..4 {
        assert!((closed[k] - numeric[k]).abs() < 1e-8);
    }
    unsafe {
        assert_eq!(
            ps_evolve_numeric(field, p0.as_ptr(), 2.0, 0, numeric.as_mut_ptr()),
            PsStatus::InvalidArgument
        );
        ps_field_free(field);
    }
}

#[test]
fn faraday_tensor_squares_to_quarter_invariant() {
    let (e, b) = ([0.3, -0.2, 0.5], [0.1, 0.4, -0.6]);
    let mut field = ptr::null_mut();
    let (mut fc, mut sq) = (ptr::null_mut(), ptr::null_mut());
    let mut z = PsComplex::default();
    unsafe {
        assert_eq!(ps_field_new(e.as_ptr(), b.as_ptr(), &mut field), PsStatus::Ok);
        assert_eq!(ps_faraday_tensor(field, &mut fc), PsStatus::Ok);
        assert_eq!(ps_operator_compose(fc, fc, &mut sq), PsStatus::Ok);
        assert_eq!(ps_field_invariant(field, &mut z), PsStatus::Ok);
    }
    let m = entries(sq);
    for r in 0..4 {
        for col in 0..4 {
            let expected = if r == col {
                c(z.re / 4.0, z.im / 4.0)
            } else {
                c(0.0, 0.0)
            };
            let got = m[r * 4 + col];
            assert!((got.re - expected.re).abs() < 1e-14 && (got.im - expected.im).abs() < 1e-14);
        }
    }
    unsafe {
        ps_operator_free(sq);
        ps_operator_free(fc);
        ps_field_free(field);
    }
}

#[test]
fn generator_images_and_exponentials() {
    let mut gen = ptr::null_mut();
    let mut flow = ptr::null_mut();
    unsafe {
        assert_eq!(
            ps_generator_image(c"spin1".as_ptr(), c"M01".as_ptr(), &mut gen),
            PsStatus::Ok
        );
        assert_eq!(ps_operator_exp(gen, 0.5, &mut flow), PsStatus::Ok);
    }
    let u0 = [c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)];
    let mut out = [PsComplex::default(); 4];
    assert_eq!(
        unsafe { ps_operator_apply(flow, u0.as_ptr(), out.as_mut_ptr()) },
        PsStatus::Ok
    );
    assert!((out[0].re - 0.5f64.cosh()).abs() < 1e-14);
    assert!((out[1].re + 0.5f64.sinh()).abs() < 1e-14);

    let mut d = ptr::null_mut();
    assert_eq!(unsafe { ps_d_basis(0, 1, &mut d) }, PsStatus::Ok);
    assert_eq!(entries(d), entries(gen));
    unsafe {
        ps_operator_free(d);
        ps_operator_free(flow);
        ps_operator_free(gen);
    }
}

#[test]
fn operator_round_trip_and_products() {
    let raw: [PsComplex; 16] = std::array::from_fn(|k| c(k as f64, -(k as f64) / 2.0));
    let mut op = ptr::null_mut();
    assert_eq!(unsafe { ps_operator_new(raw.as_ptr(), &mut op) }, PsStatus::Ok);
    assert_eq!(entries(op), raw);
    unsafe { ps_operator_free(op) };

    let a = [c(1.0, 0.0), c(0.0, 1.0), c(2.0, 0.0), c(0.0, 0.0)];
    let b = [c(3.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(1.0, -1.0)];
    let mut s = PsComplex::default();
    assert_eq!(
        unsafe { ps_scalar_product(a.as_ptr(), b.as_ptr(), &mut s) },
        PsStatus::Ok
    );
    // 1·3 − i·1 − 0 − 0
    assert_eq!(s, c(3.0, -1.0));

    let mut t = [PsComplex::default(); 4];
    let mut t_rev = [PsComplex::default(); 4];
    unsafe {
        assert_eq!(
            ps_tri_product(a.as_ptr(), b.as_ptr(), b.as_ptr(), t.as_mut_ptr()),
            PsStatus::Ok
        );
        assert_eq!(
            ps_tri_product(b.as_ptr(), b.as_ptr(), a.as_ptr(), t_rev.as_mut_ptr()),
            PsStatus::Ok
        );
    }
    for k in 0..4 {
        assert!((t[k].re - t_rev[k].re).abs() < 1e-14 && (t[k].im - t_rev[k].im).abs() < 1e-14);
    }
}

#[test]
fn errors_are_reported_with_codes_and_messages() {
    let mut op = ptr::null_mut();
    let mut field = ptr::null_mut();
    unsafe {
        assert_eq!(ps_d_basis(4, 0, &mut op), PsStatus::IndexOutOfRange);
        assert!(last_error().contains('4'));
        assert_eq!(
            ps_generator_image(c"spin1".as_ptr(), c"Q7".as_ptr(), &mut op),
            PsStatus::UnknownLabel
        );
        assert_eq!(
            ps_generator_image(c"spin9".as_ptr(), c"M01".as_ptr(), &mut op),
            PsStatus::UnknownLabel
        );
        assert_eq!(
            ps_generator_image(c"spin1".as_ptr(), c"P0".as_ptr(), &mut op),
            PsStatus::InvalidArgument
        );
        assert_eq!(
            ps_generator_image(ptr::null(), c"M01".as_ptr(), &mut op),
            PsStatus::NullPointer
        );
        assert_eq!(ps_d_basis(0, 1, ptr::null_mut()), PsStatus::NullPointer);
        let bad = [f64::NAN, 0.0, 0.0];
        assert_eq!(
            ps_field_new(bad.as_ptr(), bad.as_ptr(), &mut field),
            PsStatus::NonFinite
        );
        assert!(op.is_null() && field.is_null());
        ps_operator_free(ptr::null_mut());
        ps_field_free(ptr::null_mut());
    }
    for status in [PsStatus::Ok, PsStatus::Panic, PsStatus::NotReal] {
        let msg = unsafe { CStr::from_ptr(ps_status_message(status)) };
        assert!(!msg.to_bytes().is_empty());
    }
}

/// Compiles a small C program against the generated header when a C compiler is present.
#[test]
fn generated_header_compiles_as_c() {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header = root.join("include").join("phasespace.h");
    let text = std::fs::read_to_string(&header).expect("build script writes the header");
    for symbol in [
        "ps_field_new",
        "ps_evolve_closed_form",
        "ps_operator_exp",
        "PS_STATUS_NOT_REAL",
        "PsComplex",
    ] {
        assert!(text.contains(symbol), "{symbol} missing from header");
    }
    let Ok(cc) = which_cc() else {
        eprintln!("no C compiler found; skipping compile check");
        return;
    };
    let src = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("header_check.c");
    std::fs::write(
        &src,
        "#include \"phasespace.h\"\n\
         int main(void) {\n\
           PsField *f = 0; double e[3] = {1, 0, 0}, b[3] = {0, 0, 0};\n\
           PsStatus s = ps_field_new(e, b, &f);\n\
           ps_field_free(f);\n\
           return s == PS_STATUS_OK ? 0 : 1;\n\
         }\n",
    )
    .unwrap();
    let status = Command::new(cc)
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(root.join("include"))
        .arg(&src)
        .status()
        .unwrap();
    assert!(status.success());
}

fn which_cc() -> Result<&'static str, ()> {
    ["cc", "gcc", "clang"]
        .into_iter()
        .find(|c| {
            Command::new(c)
                .arg("--version")
                .output()
                .is_ok_and(|o| o.status.success())
        })
        .ok_or(())
}
