use std::env;
use std::path::PathBuf;

fn main() {
    let crate_dir = env::var("CARGO_MANIFEST_DIR").unwrap();
    let header = PathBuf::from(&crate_dir).join("include").join("takeuchi.h");
    let config = cbindgen::Config {
        language: cbindgen::Language::C,
        include_guard: Some("TAKEUCHI_CAPI_H".to_string()),
        documentation: true,
        cpp_compat: true,
        ..Default::default()
    };
    match cbindgen::Builder::new()
        .with_crate(&crate_dir)
        .with_config(config)
        .generate()
    {
        Ok(bindings) => {
            bindings.write_to_file(header);
        }
        Err(err) => {
            // Header generation is best-effort during plain builds;
            // failures are surfaced as warnings rather than breaking
            // dependent crates.
            println!("cargo:warning=cbindgen failed: {err}");
        }
    }
    println!("cargo:rerun-if-changed=src/lib.rs");
}
