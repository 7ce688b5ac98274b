// expect: reported=1 refuted=1 kind=infeasible
int neq(char x) {
  int *p = 0;
  if (x != 5) {
    if (x == 5)
      return *p;
  }
  return 0;
}
