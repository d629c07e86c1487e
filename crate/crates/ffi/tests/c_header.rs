use std::path::{Path, PathBuf};
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "schroder.h"

int main(void) {
    SchroderPathHandle *path = NULL;
    SchroderPermHandle *perm = NULL;
    SchroderPathHandle *back = NULL;
    char *text = NULL;
    uint64_t n = 0;

    if (schroder_path_parse("nennnneeedennede", &path) != SCHRODER_STATUS_OK) return 1;
    if (schroder_phi(path, &perm) != SCHRODER_STATUS_OK) return 2;
    if (schroder_perm_to_string(perm, &text) != SCHRODER_STATUS_OK) return 3;
    if (strcmp(text, "5,10,6,7,8,2,9,3,1,4") != 0) return 4;
    schroder_string_free(text);
    if (schroder_phi_inverse(perm, &back) != SCHRODER_STATUS_OK) return 5;
    if (schroder_path_to_string(back, &text) != SCHRODER_STATUS_OK) return 6;
    if (strcmp(text, "nennnneeedennede") != 0) return 7;
    schroder_string_free(text);

    SchroderPermHandle *bad = NULL;
    SchroderPathHandle *none = NULL;
    if (schroder_perm_parse("1,2,4,3", &bad) != SCHRODER_STATUS_OK) return 8;
    if (schroder_phi_inverse(bad, &none) != SCHRODER_STATUS_NOT_IN_CLASS) return 9;
    if (strstr(schroder_last_error_message(), "1243") == NULL) return 10;

    if (schroder_count(SCHRODER_FAMILY_CENTROSYMMETRIC_INVOLUTIONS, SCHRODER_METHOD_BRUTE_FORCE, 13, &n)
        != SCHRODER_STATUS_OK || n != 169) return 11;

    schroder_perm_free(bad);
    schroder_path_free(back);
    schroder_perm_free(perm);
    schroder_path_free(path);
    puts("ok");
    return 0;
}
"#;

fn include_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("include")
}

fn have_cc() -> bool {
    Command::new("cc").arg("--version").output().is_ok()
}

#[test]
fn header_is_valid_c() {
    if !have_cc() {
        eprintln!("cc not found; skipping header check");
        return;
    }
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("check.c");
    std::fs::write(&src, PROGRAM).unwrap();
    let status = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(include_dir())
        .arg(&src)
        .status()
        .unwrap();
    assert!(status.success());
}

#[test]
fn c_program_links_and_runs() {
    if !have_cc() {
        eprintln!("cc not found; skipping link check");
        return;
    }
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(Path::parent).unwrap();
    let lib = profile_dir.join("libschroder_ffi.a");
    if !lib.exists() {
        eprintln!("{} not built; skipping link check", lib.display());
        return;
    }
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("main.c");
    let bin = dir.path().join("main");
    std::fs::write(&src, PROGRAM).unwrap();
    let status = Command::new("cc")
        .args(["-std=c99", "-I"])
        .arg(include_dir())
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&bin).output().unwrap();
    assert!(out.status.success(), "exit {:?}", out.status.code());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "ok\n");
}
