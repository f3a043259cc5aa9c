#include <stdio.h>

int main(void)
{
    FILE *f = fopen("out.txt", "w");
    if (f == NULL)
        return 1;
    fputs("data\n", f);
    fclose(f);
    fclose(f);
    return 0;
}
