// expect: reported=1 refuted=1 kind=infeasible
int is_odd(char v) {
  return v & 1;
}

int use(char v) {
  int *p = 0;
  if (is_odd(v) && !is_odd(v))
    return *p;
  return 0;
}
