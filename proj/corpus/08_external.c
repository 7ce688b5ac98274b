// expect: reported=2 refuted=0 kind=true
int get_value(void);
void fill(int *out);

int ext(void) {
  int v = get_value();
  int *p = 0;
  if (v == 42)
    return *p;
  return 0;
}

int ext2(void) {
  int x = 0;
  fill(&x);
  return 10 / x;
}
