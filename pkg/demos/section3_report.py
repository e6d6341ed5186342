"""Print the homology checks on the transcribed class dataset."""

from lensfill import section3

if __name__ == "__main__":
    for label, ok, detail in section3.verify():
        print(f"{'ok  ' if ok else 'FAIL'} {label}: {detail}")
    print("gram report:")
    for ln in section3.gram_report().lines():
        print("  " + ln)
