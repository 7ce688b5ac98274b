// expect: reported=1 refuted=1 kind=infeasible
int rel(char x) {
  int *p = 0;
  if (x + 1 > 5) {
    if (x < 2)
      return *p;
  }
  return 0;
}
