// expect: reported=1 refuted=1 kind=infeasible
int count(char n) {
  int i = 0;
  int s = 0;
  int *p = 0;
  while (i < n) {
    s = s + n + n;
    i = i + 1;
  }
  if (s & 1)
    return *p;
  return 0;
}
