#include <stdio.h>

int main(void)
{
    char line[64];
    printf("name? ");
    gets(line);
    printf("hello %s\n", line);
    return 0;
}
