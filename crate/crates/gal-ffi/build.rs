fn main() {
    println!("cargo:rerun-if-changed=src/lib.rs");
    println!("cargo:rerun-if-changed=cbindgen.toml");

    #[cfg(feature = "capi-header")]
    {
        let crate_dir = std::env::var("CARGO_MANIFEST_DIR").expect("manifest dir");
        match cbindgen::generate(&crate_dir) {
            Ok(bindings) => {
                bindings.write_to_file(format!("{crate_dir}/include/gal.h"));
            }
            Err(e) => println!("cargo:warning=cbindgen failed: {e}"),
        }
    }
}
